//! Code constructions: BCH generator polynomials, dual-containing BCH
//! parameterizations, the Plotkin `[u | u+v]` sum, characteristic-2 and
//! lambda-based self-dual constructions, the cyclic length-doubling
//! construction with its explicit coordinate permutation, and end-to-end
//! pipelines that verify their own conclusions.

use std::sync::Arc;
use thiserror::Error;

use crate::codes::{self, CodeError, CyclicCode, DualityMode, LinearCode};
use crate::cyclo::{self, CycloError};
use crate::gf::{self, FieldDescriptor, FieldElement, GfError};
use crate::polyring::{self, PolyError, Polynomial};

#[derive(Debug, Error)]
pub enum ConstructError {
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("construction violates its own theorem: {0}")]
    TheoremViolation(String),
    #[error("the input code does not contain its dual")]
    NotDualContaining,
    #[error("lambda^2 != -1")]
    BadLambda,
    #[error("field order {0} is not congruent to 1 mod 4")]
    WrongResidue(u64),
    #[error("-1 has no square root in the field of order {0}")]
    NoSquareRoot(u64),
    #[error("length {0} must be odd")]
    EvenLength(u64),
    #[error("construction requires characteristic 2, got {0}")]
    OddCharacteristic(u64),
    #[error("bad length: {0}")]
    BadLength(String),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Cyclo(#[from] CycloError),
    #[error(transparent)]
    Gf(#[from] GfError),
}

pub type ConstructResult<T> = Result<T, ConstructError>;

fn pow_u64(q: u64, e: u64) -> ConstructResult<u64> {
    let mut acc: u128 = 1;
    for _ in 0..e {
        acc = acc
            .checked_mul(q as u128)
            .filter(|&v| v <= u64::MAX as u128)
            .ok_or_else(|| ConstructError::BadParameters(format!("{q}^{e} overflows")))?;
    }
    Ok(acc as u64)
}

/// Smallest integer s with s^2 >= x.
pub fn ceil_sqrt(x: u64) -> u64 {
    let mut s = (x as f64).sqrt() as u64;
    while s * s < x {
        s += 1;
    }
    while s > 0 && (s - 1) * (s - 1) >= x {
        s -= 1;
    }
    s
}

fn round_up_even(x: u64) -> u64 {
    if x % 2 == 1 {
        x + 1
    } else {
        x
    }
}

/// Parameters of a BCH code: coefficient field, length, designed distance,
/// starting exponent, and the canonical n-th root of unity in the splitting
/// field F_{q^m}, m = ord_n(q).
#[derive(Debug, Clone)]
pub struct BchSpec {
    pub field: Arc<FieldDescriptor>,
    pub n: u64,
    pub delta: u64,
    pub b: u64,
    pub ambient: Arc<FieldDescriptor>,
    pub beta: FieldElement,
    pub m: u64,
}

impl BchSpec {
    pub fn new(
        field: &Arc<FieldDescriptor>,
        n: u64,
        delta: u64,
        b: u64,
    ) -> ConstructResult<BchSpec> {
        if delta < 2 {
            return Err(ConstructError::BadParameters(format!(
                "designed distance {delta} must be at least 2"
            )));
        }
        if n == 0 || cyclo::gcd_u64(n, field.characteristic()) != 1 {
            return Err(ConstructError::BadParameters(format!(
                "length {n} must be nonzero and coprime to the characteristic"
            )));
        }
        let (ambient, beta) = polyring::splitting_field(field, n)?;
        let m = if n == 1 { 1 } else { cyclo::ord_mod(n, field.order())? };
        Ok(BchSpec { field: field.clone(), n, delta, b, ambient, beta, m })
    }
}

/// bch_generator: lcm of the minimal polynomials of beta^b .. beta^{b+delta-2};
/// the BCH bound gives d >= delta (a recorded bound, never assumed exact).
pub fn bch_generator(spec: &BchSpec) -> ConstructResult<CyclicCode> {
    let partition = cyclo::cyclotomic_cosets(spec.field.order(), spec.n)?;
    let mut leaders: Vec<u64> = Vec::new();
    for i in 0..spec.delta - 1 {
        let e = (spec.b + i) % spec.n;
        let coset = partition.coset_of(e).expect("residue is covered by the partition");
        if !leaders.contains(&coset[0]) {
            leaders.push(coset[0]);
        }
    }
    let mut g = Polynomial::one(&spec.field);
    for leader in leaders {
        let coset = partition.coset_of(leader).unwrap();
        g = g.mul(&polyring::minimal_polynomial(&spec.field, &spec.beta, coset)?);
    }
    Ok(CyclicCode::from_polynomial(&spec.field, spec.n as usize, &g)?)
}

/// dual_containing_bch_euclidean: for odd m and mu | q^m - 1, the BCH code
/// of length n = (q^m - 1)/mu with designed distance
/// delta = floor((q^{(m+1)/2} - q + 1)/mu). The dual-containing property is
/// re-verified computationally; failure is a hard error.
pub fn dual_containing_bch_euclidean(
    q: u64,
    m: u64,
    mu: u64,
) -> ConstructResult<(CyclicCode, u64)> {
    if m % 2 == 0 || m == 0 {
        return Err(ConstructError::BadParameters(format!("m = {m} must be odd")));
    }
    let qm = pow_u64(q, m)?;
    if mu == 0 || (qm - 1) % mu != 0 || mu == qm - 1 {
        return Err(ConstructError::BadParameters(format!(
            "mu = {mu} must be a proper divisor of {}",
            qm - 1
        )));
    }
    let n = (qm - 1) / mu;
    if n <= 4 {
        return Err(ConstructError::BadParameters(format!("n = {n} must exceed 4")));
    }
    let delta = (pow_u64(q, (m + 1) / 2)? - q + 1) / mu;
    if delta < 2 {
        return Err(ConstructError::BadParameters(format!(
            "designed distance {delta} must be at least 2"
        )));
    }
    let field = gf::field_of_order(q)?;
    let spec = BchSpec::new(&field, n, delta, 1)?;
    let code = bch_generator(&spec)?;
    if !code.is_dual_containing(DualityMode::Euclidean)? {
        return Err(ConstructError::TheoremViolation(format!(
            "BCH code (q={q}, n={n}, delta={delta}) is not Euclidean dual-containing"
        )));
    }
    Ok((code, delta))
}

/// dual_containing_bch_hermitian: over F_{q1^2}, length n = (q1^{2m} - 1)/mu
/// with designed distance delta = (q1^m - 1)/mu, for odd m and
/// mu | q1^m - 1. Hermitian dual-containment is re-verified.
pub fn dual_containing_bch_hermitian(
    q1: u64,
    m: u64,
    mu: u64,
) -> ConstructResult<(CyclicCode, u64)> {
    if m % 2 == 0 || m == 0 {
        return Err(ConstructError::BadParameters(format!("m = {m} must be odd")));
    }
    let q1m = pow_u64(q1, m)?;
    if mu == 0 || (q1m - 1) % mu != 0 || mu == q1m - 1 {
        return Err(ConstructError::BadParameters(format!(
            "mu = {mu} must be a proper divisor of {}",
            q1m - 1
        )));
    }
    let delta = (q1m - 1) / mu;
    if delta < 2 {
        return Err(ConstructError::BadParameters(format!(
            "designed distance {delta} must be at least 2"
        )));
    }
    let n = (pow_u64(q1, 2 * m)? - 1) / mu;
    let field = gf::field_of_order(q1 * q1)?;
    let spec = BchSpec::new(&field, n, delta, 1)?;
    let code = bch_generator(&spec)?;
    if !code.is_dual_containing(DualityMode::Hermitian)? {
        return Err(ConstructError::TheoremViolation(format!(
            "BCH code (q={}, n={n}, delta={delta}) is not Hermitian dual-containing",
            q1 * q1
        )));
    }
    Ok((code, delta))
}

/// plotkin: the `[u | u+v]` sum with generator [[G1 | G1], [0 | G2]], of
/// dimension k1 + k2 and distance min(2 d1, d2).
pub fn plotkin(c1: &LinearCode, c2: &LinearCode) -> ConstructResult<LinearCode> {
    if c1.n() != c2.n() {
        return Err(ConstructError::Code(CodeError::LengthMismatch));
    }
    if !c1.field().same_field(c2.field()) {
        return Err(ConstructError::Code(CodeError::FieldMismatch));
    }
    let n = c1.n();
    let field = c1.field().clone();
    let mut rows = Vec::with_capacity(c1.k() + c2.k());
    for r in c1.rows() {
        let mut row = r.clone();
        row.extend(r.iter().cloned());
        rows.push(row);
    }
    for r in c2.rows() {
        let mut row = vec![field.zero(); n];
        row.extend(r.iter().cloned());
        rows.push(row);
    }
    Ok(LinearCode::from_rows(&field, 2 * n, rows)?)
}

/// selfdual_from_dualcontaining: for a dual-containing code C over a
/// characteristic-2 field, Plotkin(C, C^perp) is self-dual of dimension n
/// (Euclidean or Hermitian per `mode`); self-duality is re-verified.
pub fn selfdual_from_dualcontaining(
    c: &CyclicCode,
    mode: DualityMode,
) -> ConstructResult<LinearCode> {
    let ch = c.field().characteristic();
    if ch != 2 {
        return Err(ConstructError::OddCharacteristic(ch));
    }
    if !c.is_dual_containing(mode)? {
        return Err(ConstructError::NotDualContaining);
    }
    let g1 = c.generator_matrix();
    let g2 = c.dual_code(mode)?.generator_matrix();
    let d = plotkin(&g1, &g2)?;
    if d.k() != c.length() || !d.is_self_dual_linear(mode) {
        return Err(ConstructError::TheoremViolation(
            "Plotkin sum of C and its dual is not self-dual".into(),
        ));
    }
    Ok(d)
}

/// find_lambda: the first element (in the field's fixed ordering) with
/// lambda^2 = -1; exists exactly when |F| = 1 (mod 4).
pub fn find_lambda(field: &Arc<FieldDescriptor>) -> ConstructResult<FieldElement> {
    if field.order() % 4 != 1 {
        return Err(ConstructError::NoSquareRoot(field.order()));
    }
    let minus_one = field.one().neg();
    for e in field.elements() {
        if e.mul(&e) == minus_one {
            return Ok(e);
        }
    }
    Err(ConstructError::NoSquareRoot(field.order()))
}

/// lambda_construction: for q = 1 (mod 4), lambda^2 = -1, and C Euclidean
/// dual-containing, the code with generator [[G | lambda G], [0 | G^perp]]
/// is a [2n, n] self-dual linear code; self-duality is re-verified.
pub fn lambda_construction(
    c: &CyclicCode,
    lambda: &FieldElement,
) -> ConstructResult<LinearCode> {
    let field = c.field().clone();
    if field.order() % 4 != 1 {
        return Err(ConstructError::WrongResidue(field.order()));
    }
    if !lambda.field().same_field(&field) {
        return Err(ConstructError::Code(CodeError::FieldMismatch));
    }
    if lambda.mul(lambda) != field.one().neg() {
        return Err(ConstructError::BadLambda);
    }
    if !c.is_dual_containing(DualityMode::Euclidean)? {
        return Err(ConstructError::NotDualContaining);
    }
    let n = c.length();
    let g1 = c.generator_matrix();
    let g2 = c.dual_code(DualityMode::Euclidean)?.generator_matrix();
    let mut rows = Vec::with_capacity(g1.k() + g2.k());
    for r in g1.rows() {
        let mut row = r.clone();
        row.extend(r.iter().map(|x| x.mul(lambda)));
        rows.push(row);
    }
    for r in g2.rows() {
        let mut row = vec![field.zero(); n];
        row.extend(r.iter().cloned());
        rows.push(row);
    }
    let d = LinearCode::from_rows(&field, 2 * n, rows)?;
    if d.k() != n || !d.is_self_dual_linear(DualityMode::Euclidean) {
        return Err(ConstructError::TheoremViolation(
            "lambda construction output is not self-dual".into(),
        ));
    }
    Ok(d)
}

fn doubled_cyclic(c: &CyclicCode, mode: DualityMode) -> ConstructResult<CyclicCode> {
    let n = c.length() as u64;
    if n % 2 == 0 {
        return Err(ConstructError::EvenLength(n));
    }
    let ch = c.field().characteristic();
    if ch != 2 {
        return Err(ConstructError::OddCharacteristic(ch));
    }
    if !c.is_dual_containing(mode)? {
        return Err(ConstructError::NotDualContaining);
    }
    let gen = c.generator().mul(&c.dual_generator_for(mode)?);
    let doubled = CyclicCode::from_polynomial(c.field(), 2 * c.length(), &gen)?;
    if doubled.dim() != c.length() {
        return Err(ConstructError::TheoremViolation(format!(
            "doubled code has dimension {}, expected {}",
            doubled.dim(),
            c.length()
        )));
    }
    if !doubled.is_self_dual_cyclic(mode)? {
        return Err(ConstructError::TheoremViolation(
            "doubled cyclic code is not self-dual".into(),
        ));
    }
    Ok(doubled)
}

/// van_lint_cyclic: for odd n, characteristic 2, and C dual-containing with
/// generator g1 and dual generator h-perp = g1 g2, the cyclic code of
/// length 2n generated by g1^2 g2 = g1 * h-perp. Its dimension equals n and
/// it is self-dual; both facts are re-verified.
pub fn van_lint_cyclic(c: &CyclicCode) -> ConstructResult<CyclicCode> {
    doubled_cyclic(c, DualityMode::Euclidean)
}

/// Hermitian variant: generator g * h^{perp_H}, Hermitian self-dual.
pub fn van_lint_cyclic_hermitian(c: &CyclicCode) -> ConstructResult<CyclicCode> {
    doubled_cyclic(c, DualityMode::Hermitian)
}

/// van_lint_permutation: perm[j] is the source Plotkin coordinate
/// ((a | b) layout, a = u at 0..n, b = u+v at n..2n) placed at output
/// position j of the interleaving
/// w = (a0, b1, a2, ..., b_{n-2}, a_{n-1}, b0, a1, ..., a_{n-2}, b_{n-1}).
/// Applying it to the Plotkin sum of C and C^perp yields exactly the
/// codeword set of `van_lint_cyclic(C)`.
pub fn van_lint_permutation(n: usize) -> ConstructResult<Vec<usize>> {
    if n % 2 == 0 {
        return Err(ConstructError::EvenLength(n as u64));
    }
    let mut perm = Vec::with_capacity(2 * n);
    for j in 0..n {
        perm.push(if j % 2 == 0 { j } else { n + j });
    }
    for t in 0..n {
        perm.push(if t % 2 == 0 { n + t } else { t });
    }
    Ok(perm)
}

/// Reorder `word` so output position j holds `word[perm[j]]`.
pub fn apply_permutation(perm: &[usize], word: &[FieldElement]) -> Vec<FieldElement> {
    perm.iter().map(|&s| word[s].clone()).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    /// designed-distance lower bound d >= delta
    BchDelta,
    /// binary even-weight roundup of the sqrt(2n) bound, max'ed with delta
    EvenRoundedDelta,
    /// even-rounded ceil(sqrt(n)) lower bound
    SqrtEvenRounded,
}

#[derive(Debug, Clone)]
pub enum BuiltCode {
    Cyclic(CyclicCode),
    Linear(LinearCode),
}

impl BuiltCode {
    pub fn n(&self) -> usize {
        match self {
            BuiltCode::Cyclic(c) => c.length(),
            BuiltCode::Linear(c) => c.n(),
        }
    }
    pub fn k(&self) -> usize {
        match self {
            BuiltCode::Cyclic(c) => c.dim(),
            BuiltCode::Linear(c) => c.k(),
        }
    }
    pub fn field(&self) -> &Arc<FieldDescriptor> {
        match self {
            BuiltCode::Cyclic(c) => c.field(),
            BuiltCode::Linear(c) => c.field(),
        }
    }
    pub fn generator_matrix(&self) -> LinearCode {
        match self {
            BuiltCode::Cyclic(c) => c.generator_matrix(),
            BuiltCode::Linear(c) => c.clone(),
        }
    }
}

/// Everything a pipeline certifies about one parameter tuple, minus the
/// minimum-distance computation (attached separately by the report layer).
#[derive(Debug, Clone)]
pub struct PipelineOutput {
    pub construction: &'static str,
    pub params: Vec<(&'static str, u64)>,
    pub mode: DualityMode,
    /// the dual-containing component code C
    pub component: CyclicCode,
    pub delta: Option<u64>,
    pub bound_kind: BoundKind,
    pub bound: u64,
    pub code: BuiltCode,
    /// named theorem checks, all re-verified computationally
    pub checks: Vec<(&'static str, bool)>,
}

impl PipelineOutput {
    pub fn component_dual(&self) -> ConstructResult<CyclicCode> {
        Ok(self.component.dual_code(self.mode)?)
    }
}

/// Euclidean self-dual cyclic pipeline: dual-containing BCH component plus
/// the cyclic doubling, with the even-rounded sqrt(2n) refinement of the
/// bound when q = 2 and mu = 1.
pub fn thm51_pipeline(q: u64, m: u64, mu: u64) -> ConstructResult<PipelineOutput> {
    if !q.is_power_of_two() {
        return Err(ConstructError::BadParameters(format!("q = {q} must be a power of 2")));
    }
    let (component, delta) = dual_containing_bch_euclidean(q, m, mu)?;
    let doubled = van_lint_cyclic(&component)?;
    let (bound, bound_kind) = if q == 2 && mu == 1 {
        let s = round_up_even(ceil_sqrt(2 * component.length() as u64));
        (delta.max(s), BoundKind::EvenRoundedDelta)
    } else {
        (delta, BoundKind::BchDelta)
    };
    Ok(PipelineOutput {
        construction: "thm51",
        params: vec![("q", q), ("m", m), ("mu", mu)],
        mode: DualityMode::Euclidean,
        component,
        delta: Some(delta),
        bound_kind,
        bound,
        code: BuiltCode::Cyclic(doubled),
        checks: vec![("dual_containing", true), ("dimension", true), ("self_dual", true)],
    })
}

/// Hermitian self-dual cyclic pipeline over F_{q1^2}.
pub fn thm52_pipeline(q1: u64, m: u64, mu: u64) -> ConstructResult<PipelineOutput> {
    if !q1.is_power_of_two() {
        return Err(ConstructError::BadParameters(format!("q1 = {q1} must be a power of 2")));
    }
    let (component, delta) = dual_containing_bch_hermitian(q1, m, mu)?;
    let doubled = van_lint_cyclic_hermitian(&component)?;
    Ok(PipelineOutput {
        construction: "thm52",
        params: vec![("q1", q1), ("m", m), ("mu", mu)],
        mode: DualityMode::Hermitian,
        component,
        delta: Some(delta),
        bound_kind: BoundKind::BchDelta,
        bound: delta,
        code: BuiltCode::Cyclic(doubled),
        checks: vec![("dual_containing", true), ("dimension", true), ("self_dual", true)],
    })
}

/// Self-dual linear pipeline for odd q = 1 (mod 4) via the lambda
/// construction on a dual-containing BCH component.
pub fn thm62_pipeline(q: u64, m: u64, mu: u64) -> ConstructResult<PipelineOutput> {
    if q % 4 != 1 {
        return Err(ConstructError::WrongResidue(q));
    }
    let (component, delta) = dual_containing_bch_euclidean(q, m, mu)?;
    let lambda = find_lambda(component.field())?;
    let code = lambda_construction(&component, &lambda)?;
    Ok(PipelineOutput {
        construction: "thm62",
        params: vec![("q", q), ("m", m), ("mu", mu)],
        mode: DualityMode::Euclidean,
        component,
        delta: Some(delta),
        bound_kind: BoundKind::BchDelta,
        bound: delta,
        code: BuiltCode::Linear(code),
        checks: vec![("dual_containing", true), ("dimension", true), ("self_dual", true)],
    })
}

/// Quadratic-residue pipeline: for prime n = 7 (mod 8), double the binary
/// QR code into a [2n, n] self-dual cyclic code with
/// d >= even-rounded ceil(sqrt(n)).
pub fn thm72_pipeline(n: u64) -> ConstructResult<PipelineOutput> {
    let component = codes::qr_code(n).map_err(|e| match e {
        CodeError::BadLength(s) => ConstructError::BadLength(s),
        other => ConstructError::Code(other),
    })?;
    let partition = cyclo::cyclotomic_cosets(2, n)?;
    let t = component.defining_set()?;
    let criterion = codes::check_thm71_criterion(&t, &partition);
    if !criterion {
        return Err(ConstructError::TheoremViolation(format!(
            "QR defining set mod {n} fails the coset criterion"
        )));
    }
    let doubled = van_lint_cyclic(&component)?;
    let bound = round_up_even(ceil_sqrt(n));
    Ok(PipelineOutput {
        construction: "thm72",
        params: vec![("n", n)],
        mode: DualityMode::Euclidean,
        component,
        delta: None,
        bound_kind: BoundKind::SqrtEvenRounded,
        bound,
        code: BuiltCode::Cyclic(doubled),
        checks: vec![
            ("coset_criterion", true),
            ("dual_containing", true),
            ("dimension", true),
            ("self_dual", true),
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Arc<FieldDescriptor> {
        FieldDescriptor::prime(2).unwrap()
    }

    #[test]
    fn bch_examples() {
        let spec = BchSpec::new(&f2(), 7, 3, 1).unwrap();
        let c = bch_generator(&spec).unwrap();
        assert_eq!(c.generator(), &Polynomial::from_ints(&f2(), &[1, 1, 0, 1]));
        assert_eq!(c.dim(), 4);

        let f4 = gf::field_of_order(4).unwrap();
        let spec = BchSpec::new(&f4, 63, 7, 1).unwrap();
        let c = bch_generator(&spec).unwrap();
        assert_eq!(c.dim(), 48);

        assert!(matches!(
            BchSpec::new(&f2(), 7, 1, 1).unwrap_err(),
            ConstructError::BadParameters(_)
        ));
    }

    #[test]
    fn euclidean_dual_containing_bch() {
        let (c, delta) = dual_containing_bch_euclidean(2, 3, 1).unwrap();
        assert_eq!((c.length(), c.dim(), delta), (7, 4, 3));
        let (c, delta) = dual_containing_bch_euclidean(2, 5, 1).unwrap();
        assert_eq!((c.length(), delta), (31, 7));
        let (c, delta) = dual_containing_bch_euclidean(4, 3, 3).unwrap();
        assert_eq!((c.length(), c.dim(), delta), (21, 12, 4));
        assert!(matches!(
            dual_containing_bch_euclidean(2, 4, 1).unwrap_err(),
            ConstructError::BadParameters(_)
        ));
        // mu = 7 gives n = 1 <= 4
        assert!(matches!(
            dual_containing_bch_euclidean(2, 3, 7).unwrap_err(),
            ConstructError::BadParameters(_)
        ));
    }

    #[test]
    fn hermitian_dual_containing_bch() {
        let (c, delta) = dual_containing_bch_hermitian(2, 3, 1).unwrap();
        assert_eq!((c.length(), c.dim(), delta), (63, 48, 7));
        assert_eq!(c.field().order(), 4);
        assert!(matches!(
            dual_containing_bch_hermitian(2, 3, 7).unwrap_err(),
            ConstructError::BadParameters(_)
        ));
        let (c, delta) = dual_containing_bch_hermitian(2, 5, 1).unwrap();
        assert_eq!((c.length(), delta), (1023, 31));
    }

    #[test]
    fn plotkin_examples() {
        let f2 = f2();
        let hamming = CyclicCode::from_polynomial(&f2, 7, &Polynomial::from_ints(&f2, &[1, 1, 0, 1]))
            .unwrap();
        let simplex = hamming.dual_code(DualityMode::Euclidean).unwrap();
        let p = plotkin(&hamming.generator_matrix(), &simplex.generator_matrix()).unwrap();
        assert_eq!((p.n(), p.k()), (14, 7));
        // degenerate components
        let zero = CyclicCode::from_polynomial(&f2, 7, &Polynomial::xn_minus_one(&f2, 7)).unwrap();
        let p = plotkin(&hamming.generator_matrix(), &zero.generator_matrix()).unwrap();
        assert_eq!((p.n(), p.k()), (14, 4));
        let p = plotkin(&zero.generator_matrix(), &simplex.generator_matrix()).unwrap();
        assert_eq!((p.n(), p.k()), (14, 3));
        // mismatched lengths
        let short = CyclicCode::from_polynomial(&f2, 3, &Polynomial::from_ints(&f2, &[1, 1])).unwrap();
        assert!(plotkin(&hamming.generator_matrix(), &short.generator_matrix()).is_err());
    }

    #[test]
    fn selfdual_construction() {
        let f2 = f2();
        let hamming = CyclicCode::from_polynomial(&f2, 7, &Polynomial::from_ints(&f2, &[1, 1, 0, 1]))
            .unwrap();
        let d = selfdual_from_dualcontaining(&hamming, DualityMode::Euclidean).unwrap();
        assert_eq!((d.n(), d.k()), (14, 7));
        assert!(d.is_self_dual_linear(DualityMode::Euclidean));
        let simplex = hamming.dual_code(DualityMode::Euclidean).unwrap();
        assert!(matches!(
            selfdual_from_dualcontaining(&simplex, DualityMode::Euclidean).unwrap_err(),
            ConstructError::NotDualContaining
        ));
        // odd characteristic rejected before any other check
        let f5 = FieldDescriptor::prime(5).unwrap();
        let whole = CyclicCode::from_polynomial(&f5, 4, &Polynomial::one(&f5)).unwrap();
        assert!(matches!(
            selfdual_from_dualcontaining(&whole, DualityMode::Euclidean).unwrap_err(),
            ConstructError::OddCharacteristic(5)
        ));
    }

    #[test]
    fn lambda_search() {
        let f5 = FieldDescriptor::prime(5).unwrap();
        assert_eq!(find_lambda(&f5).unwrap().prime_value(), Some(2));
        let f13 = FieldDescriptor::prime(13).unwrap();
        assert_eq!(find_lambda(&f13).unwrap().prime_value(), Some(5));
        let f7 = FieldDescriptor::prime(7).unwrap();
        assert!(matches!(find_lambda(&f7).unwrap_err(), ConstructError::NoSquareRoot(7)));
        // F_9 with modulus t^2 + 1: lambda = t
        let f3 = FieldDescriptor::prime(3).unwrap();
        let modulus = [f3.one(), f3.zero(), f3.one()];
        let f9 = FieldDescriptor::extension(&f3, 2, Some(&modulus)).unwrap();
        let lam = find_lambda(&f9).unwrap();
        assert_eq!(lam, f9.element_at(3)); // the adjoined root t
        assert_eq!(lam.mul(&lam), f9.one().neg());
    }

    #[test]
    fn lambda_construction_small() {
        // q = 5, n = 6: g = gcd-canonical dual-containing code
        let (c, delta) = dual_containing_bch_euclidean(5, 3, 4).unwrap();
        assert_eq!((c.length(), c.dim(), delta), (31, 19, 5));
        assert_eq!(c.dual_code(DualityMode::Euclidean).unwrap().dim(), 12);
        let lam = find_lambda(c.field()).unwrap();
        let d = lambda_construction(&c, &lam).unwrap();
        assert_eq!((d.n(), d.k()), (62, 31));
        assert!(d.is_self_dual_linear(DualityMode::Euclidean));
        // a wrong lambda is rejected
        let bad = c.field().from_u64(1);
        assert!(matches!(lambda_construction(&c, &bad).unwrap_err(), ConstructError::BadLambda));
    }

    #[test]
    fn van_lint_examples() {
        let f2 = f2();
        let g1 = Polynomial::from_ints(&f2, &[1, 1, 0, 1]);
        let hamming = CyclicCode::from_polynomial(&f2, 7, &g1).unwrap();
        let doubled = van_lint_cyclic(&hamming).unwrap();
        let expected = g1.pow(2).mul(&Polynomial::from_ints(&f2, &[1, 1]));
        assert_eq!(doubled.generator(), &expected);
        assert_eq!(doubled.dim(), 7);
        assert!(doubled.is_self_dual_cyclic(DualityMode::Euclidean).unwrap());
        // failure paths
        let simplex = hamming.dual_code(DualityMode::Euclidean).unwrap();
        assert!(matches!(
            van_lint_cyclic(&simplex).unwrap_err(),
            ConstructError::NotDualContaining
        ));
        let even = CyclicCode::from_polynomial(&f2, 4, &Polynomial::from_ints(&f2, &[1, 1])).unwrap();
        assert!(matches!(van_lint_cyclic(&even).unwrap_err(), ConstructError::EvenLength(4)));
    }

    #[test]
    fn permutation_examples() {
        assert_eq!(
            van_lint_permutation(7).unwrap(),
            vec![0, 8, 2, 10, 4, 12, 6, 7, 1, 9, 3, 11, 5, 13]
        );
        assert_eq!(van_lint_permutation(1).unwrap(), vec![0, 1]);
        assert!(matches!(van_lint_permutation(4).unwrap_err(), ConstructError::EvenLength(4)));
    }

    #[test]
    fn permutation_equivalence_n7() {
        // the permuted Plotkin(C, C-perp) codeword set equals the doubled
        // cyclic code's set, all 128 words each
        let f2 = f2();
        let hamming = CyclicCode::from_polynomial(&f2, 7, &Polynomial::from_ints(&f2, &[1, 1, 0, 1]))
            .unwrap();
        let plot = selfdual_from_dualcontaining(&hamming, DualityMode::Euclidean).unwrap();
        let cyc = van_lint_cyclic(&hamming).unwrap().generator_matrix();
        let perm = van_lint_permutation(7).unwrap();

        let words = |code: &LinearCode, permute: bool| -> Vec<u64> {
            let k = code.rows().len();
            let mut out = Vec::with_capacity(1 << k);
            for msg in 0u32..1 << k {
                let message: Vec<_> = (0..k).map(|i| code.field().from_u64(u64::from(msg >> i & 1))).collect();
                let mut cw = code.encode(&message).unwrap();
                if permute {
                    cw = apply_permutation(&perm, &cw);
                }
                let bits = cw
                    .iter()
                    .enumerate()
                    .fold(0u64, |acc, (i, c)| acc | (u64::from(!c.is_zero()) << i));
                out.push(bits);
            }
            out.sort_unstable();
            out
        };
        assert_eq!(words(&plot, true), words(&cyc, false));
    }

    #[test]
    fn pipeline_thm51() {
        let out = thm51_pipeline(2, 3, 1).unwrap();
        assert_eq!((out.code.n(), out.code.k()), (14, 7));
        assert_eq!(out.delta, Some(3));
        assert_eq!(out.bound, 4);
        assert_eq!(out.bound_kind, BoundKind::EvenRoundedDelta);
        assert!(out.checks.iter().all(|&(_, ok)| ok));
        let out = thm51_pipeline(4, 3, 3).unwrap();
        assert_eq!((out.code.n(), out.code.k(), out.bound), (42, 21, 4));
        assert_eq!(out.bound_kind, BoundKind::BchDelta);
        assert!(matches!(thm51_pipeline(2, 4, 1).unwrap_err(), ConstructError::BadParameters(_)));
        assert!(matches!(thm51_pipeline(5, 3, 1).unwrap_err(), ConstructError::BadParameters(_)));
    }

    #[test]
    fn pipeline_thm52() {
        let out = thm52_pipeline(2, 3, 1).unwrap();
        assert_eq!((out.code.n(), out.code.k()), (126, 63));
        assert_eq!(out.delta, Some(7));
        assert_eq!(out.mode, DualityMode::Hermitian);
        assert_eq!(out.component.dim(), 48);
        assert_eq!(out.component_dual().unwrap().dim(), 15);
        assert!(matches!(thm52_pipeline(2, 3, 7).unwrap_err(), ConstructError::BadParameters(_)));
    }

    #[test]
    fn pipeline_thm62() {
        let out = thm62_pipeline(5, 3, 4).unwrap();
        assert_eq!((out.code.n(), out.code.k()), (62, 31));
        assert_eq!(out.delta, Some(5));
        match &out.code {
            BuiltCode::Linear(c) => assert!(c.is_self_dual_linear(DualityMode::Euclidean)),
            BuiltCode::Cyclic(_) => panic!("thm62 yields a linear code"),
        }
        assert!(matches!(thm62_pipeline(7, 3, 1).unwrap_err(), ConstructError::WrongResidue(7)));
    }

    #[test]
    fn pipeline_thm72() {
        let out = thm72_pipeline(7).unwrap();
        assert_eq!((out.code.n(), out.code.k(), out.bound), (14, 7, 4));
        let out = thm72_pipeline(23).unwrap();
        assert_eq!((out.code.n(), out.code.k(), out.bound), (46, 23, 6));
        assert!(matches!(thm72_pipeline(15).unwrap_err(), ConstructError::BadLength(_)));
        assert!(matches!(thm72_pipeline(17).unwrap_err(), ConstructError::BadLength(_)));
    }

    #[test]
    fn sqrt_helpers() {
        assert_eq!(ceil_sqrt(0), 0);
        assert_eq!(ceil_sqrt(1), 1);
        assert_eq!(ceil_sqrt(14), 4);
        assert_eq!(ceil_sqrt(16), 4);
        assert_eq!(ceil_sqrt(17), 5);
        assert_eq!(ceil_sqrt(103), 11);
        assert_eq!(round_up_even(11), 12);
        assert_eq!(round_up_even(8), 8);
    }
}
