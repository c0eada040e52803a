//! Exact arithmetic in prime fields `F_p` and polynomial-basis extensions,
//! including extensions of extensions (towers of depth at most two, i.e.
//! prime -> F_q -> F_{q^m}), so that subfield coefficients stay directly
//! recognizable.

use std::fmt;
use std::sync::{Arc, OnceLock};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GfError {
    #[error("{0} is not prime")]
    NonPrimeModulus(u64),
    #[error("supplied modulus is reducible")]
    ReducibleModulus,
    #[error("cannot invert zero")]
    ZeroInverse,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("{0} does not divide the multiplicative group order")]
    NotADivisor(u64),
    #[error("element does not lie in the base field")]
    NotInSubfield,
    #[error("{0} is not a subfield order")]
    NotASubfield(u64),
    #[error("enumeration budget exceeded")]
    BudgetExceeded,
    #[error("bad field parameters: {0}")]
    BadField(String),
}

pub type GfResult<T> = Result<T, GfError>;

/// Internal element representation: a residue for prime fields, a
/// fixed-length coefficient vector over the base for extensions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) enum Repr {
    Prime(u64),
    Ext(Vec<Repr>),
}

/// A finite field, either `F_p` or a polynomial-basis extension of another
/// field descriptor. Immutable after construction and safe to share.
pub struct FieldDescriptor {
    p: u64,
    base: Option<Arc<FieldDescriptor>>,
    degree: usize,
    modulus: Option<Vec<Repr>>,
    order: u64,
    primitive: OnceLock<Repr>,
}

impl fmt::Debug for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.base.is_none() {
            write!(f, "F_{}", self.p)
        } else {
            write!(f, "F_{} (deg {} over F_{})", self.order, self.degree, self.base.as_ref().unwrap().order)
        }
    }
}

impl PartialEq for FieldDescriptor {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p
            && self.order == other.order
            && self.degree == other.degree
            && self.modulus == other.modulus
            && match (&self.base, &other.base) {
                (None, None) => true,
                (Some(a), Some(b)) => Arc::ptr_eq(a, b) || **a == **b,
                _ => false,
            }
    }
}
impl Eq for FieldDescriptor {}

fn is_prime_u64(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).map_or(false, |dd| dd <= p) {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldDescriptor {
    /// make_prime_field: `F_p` for prime `p <= 2^31`.
    pub fn prime(p: u64) -> GfResult<Arc<FieldDescriptor>> {
        if !is_prime_u64(p) {
            return Err(GfError::NonPrimeModulus(p));
        }
        if p > (1 << 31) {
            return Err(GfError::BadField(format!("characteristic {p} too large")));
        }
        Ok(Arc::new(FieldDescriptor {
            p,
            base: None,
            degree: 1,
            modulus: None,
            order: p,
            primitive: OnceLock::new(),
        }))
    }

    /// make_extension: degree-`k` extension of `base`. When no modulus
    /// is supplied, the lexicographically smallest monic irreducible (in the
    /// fixed element ordering, most-significant coordinate last) is found by
    /// deterministic search, so downstream polynomials are reproducible.
    pub fn extension(
        base: &Arc<FieldDescriptor>,
        k: usize,
        modulus: Option<&[FieldElement]>,
    ) -> GfResult<Arc<FieldDescriptor>> {
        if k == 0 {
            return Err(GfError::BadField("extension degree must be positive".into()));
        }
        let order = (0..k).try_fold(1u64, |acc, _| acc.checked_mul(base.order)).filter(|&o| o < (1 << 62));
        let order = order.ok_or_else(|| GfError::BadField("field order too large".into()))?;
        let m: Vec<Repr> = match modulus {
            Some(coeffs) => {
                for c in coeffs {
                    if !c.field.same_field(base) {
                        return Err(GfError::FieldMismatch);
                    }
                }
                let reprs: Vec<Repr> = coeffs.iter().map(|c| c.repr.clone()).collect();
                let reprs = pv_trim(base, reprs);
                if reprs.len() != k + 1 || reprs.last() != Some(&base.r_one()) {
                    return Err(GfError::BadField(format!("modulus must be monic of degree {k}")));
                }
                if !is_irreducible(base, &reprs) {
                    return Err(GfError::ReducibleModulus);
                }
                reprs
            }
            None => search_modulus(base, k),
        };
        Ok(Arc::new(FieldDescriptor {
            p: base.p,
            base: Some(base.clone()),
            degree: k,
            modulus: Some(m),
            order,
            primitive: OnceLock::new(),
        }))
    }

    pub fn order(&self) -> u64 {
        self.order
    }
    pub fn characteristic(&self) -> u64 {
        self.p
    }
    pub fn base(&self) -> Option<&Arc<FieldDescriptor>> {
        self.base.as_ref()
    }
    /// Extension degree over the base (1 for prime fields).
    pub fn degree(&self) -> usize {
        if self.base.is_some() {
            self.degree
        } else {
            1
        }
    }
    /// Total degree over the prime field.
    pub fn total_degree(&self) -> usize {
        match &self.base {
            None => 1,
            Some(b) => self.degree * b.total_degree(),
        }
    }
    pub fn is_prime_field(&self) -> bool {
        self.base.is_none()
    }

    /// Modulus coefficients as base-field elements (ascending, monic).
    pub fn modulus(self: &Arc<Self>) -> Option<Vec<FieldElement>> {
        let base = self.base.as_ref()?;
        Some(
            self.modulus
                .as_ref()
                .unwrap()
                .iter()
                .map(|r| FieldElement { field: base.clone(), repr: r.clone() })
                .collect(),
        )
    }

    pub fn same_field(&self, other: &FieldDescriptor) -> bool {
        std::ptr::eq(self, other) || self == other
    }

    pub fn zero(self: &Arc<Self>) -> FieldElement {
        FieldElement { field: self.clone(), repr: self.r_zero() }
    }
    pub fn one(self: &Arc<Self>) -> FieldElement {
        FieldElement { field: self.clone(), repr: self.r_one() }
    }

    /// The residue of `x` modulo the modulus (extensions only).
    pub fn generator(self: &Arc<Self>) -> FieldElement {
        assert!(self.base.is_some(), "prime fields have no polynomial generator");
        let repr = if self.degree == 1 {
            // x = -c0 in a degree-1 extension
            let b = self.base.as_ref().unwrap();
            Repr::Ext(vec![b.r_neg(&self.modulus.as_ref().unwrap()[0])])
        } else {
            let b = self.base.as_ref().unwrap();
            let mut v = vec![b.r_zero(); self.degree];
            v[1] = b.r_one();
            Repr::Ext(v)
        };
        FieldElement { field: self.clone(), repr }
    }

    /// Embed an integer residue into a prime field.
    pub fn from_u64(self: &Arc<Self>, v: u64) -> FieldElement {
        assert!(self.base.is_none(), "from_u64 only applies to prime fields");
        FieldElement { field: self.clone(), repr: Repr::Prime(v % self.p) }
    }

    /// Lift a base-field element into this extension (constant coordinate).
    pub fn embed(self: &Arc<Self>, a: &FieldElement) -> GfResult<FieldElement> {
        if a.field.same_field(self) {
            return Ok(a.clone());
        }
        let base = self.base.as_ref().ok_or(GfError::FieldMismatch)?;
        if !a.field.same_field(base) {
            return Err(GfError::FieldMismatch);
        }
        let mut v = vec![base.r_zero(); self.degree];
        v[0] = a.repr.clone();
        Ok(FieldElement { field: self.clone(), repr: Repr::Ext(v) })
    }

    /// Element at position `idx` in the fixed ordering: prime fields by
    /// residue value, extensions lexicographic with the most-significant
    /// coordinate last.
    pub fn element_at(self: &Arc<Self>, idx: u64) -> FieldElement {
        assert!(idx < self.order);
        FieldElement { field: self.clone(), repr: self.r_at(idx) }
    }

    pub fn index_of(&self, a: &FieldElement) -> u64 {
        assert!(a.field.same_field(self));
        self.r_index(&a.repr)
    }

    pub fn elements(self: &Arc<Self>) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order).map(move |i| self.element_at(i))
    }

    pub fn has_subfield_of_order(&self, q1: u64) -> bool {
        if q1 < 2 {
            return false;
        }
        let mut t = 0usize;
        let mut v = 1u64;
        while v < q1 {
            v = match v.checked_mul(self.p) {
                Some(v) => v,
                None => return false,
            };
            t += 1;
        }
        v == q1 && t >= 1 && self.total_degree() % t == 0
    }

    // ----- representation-level arithmetic -----

    pub(crate) fn r_zero(&self) -> Repr {
        match &self.base {
            None => Repr::Prime(0),
            Some(b) => Repr::Ext(vec![b.r_zero(); self.degree]),
        }
    }
    pub(crate) fn r_one(&self) -> Repr {
        match &self.base {
            None => Repr::Prime(1),
            Some(b) => {
                let mut v = vec![b.r_zero(); self.degree];
                v[0] = b.r_one();
                Repr::Ext(v)
            }
        }
    }
    pub(crate) fn r_is_zero(&self, a: &Repr) -> bool {
        match (a, &self.base) {
            (Repr::Prime(v), None) => *v == 0,
            (Repr::Ext(v), Some(b)) => v.iter().all(|c| b.r_is_zero(c)),
            _ => unreachable!("representation does not match field"),
        }
    }
    pub(crate) fn r_add(&self, a: &Repr, b: &Repr) -> Repr {
        match (a, b, &self.base) {
            (Repr::Prime(x), Repr::Prime(y), None) => Repr::Prime((x + y) % self.p),
            (Repr::Ext(x), Repr::Ext(y), Some(bf)) => {
                Repr::Ext(x.iter().zip(y).map(|(u, v)| bf.r_add(u, v)).collect())
            }
            _ => unreachable!("representation does not match field"),
        }
    }
    pub(crate) fn r_neg(&self, a: &Repr) -> Repr {
        match (a, &self.base) {
            (Repr::Prime(x), None) => Repr::Prime((self.p - x) % self.p),
            (Repr::Ext(x), Some(bf)) => Repr::Ext(x.iter().map(|u| bf.r_neg(u)).collect()),
            _ => unreachable!("representation does not match field"),
        }
    }
    pub(crate) fn r_sub(&self, a: &Repr, b: &Repr) -> Repr {
        self.r_add(a, &self.r_neg(b))
    }
    pub(crate) fn r_mul(&self, a: &Repr, b: &Repr) -> Repr {
        match (a, b, &self.base) {
            (Repr::Prime(x), Repr::Prime(y), None) => {
                Repr::Prime(((*x as u128 * *y as u128) % self.p as u128) as u64)
            }
            (Repr::Ext(x), Repr::Ext(y), Some(bf)) => {
                let k = self.degree;
                let mut conv = vec![bf.r_zero(); 2 * k - 1];
                for (i, xi) in x.iter().enumerate() {
                    if bf.r_is_zero(xi) {
                        continue;
                    }
                    for (j, yj) in y.iter().enumerate() {
                        if bf.r_is_zero(yj) {
                            continue;
                        }
                        let prod = bf.r_mul(xi, yj);
                        conv[i + j] = bf.r_add(&conv[i + j], &prod);
                    }
                }
                Repr::Ext(self.reduce_vec(conv))
            }
            _ => unreachable!("representation does not match field"),
        }
    }

    /// Reduce a coefficient vector (over the base) modulo the monic modulus,
    /// returning exactly `degree` coordinates.
    fn reduce_vec(&self, mut v: Vec<Repr>) -> Vec<Repr> {
        let bf = self.base.as_ref().unwrap();
        let m = self.modulus.as_ref().unwrap();
        let k = self.degree;
        while v.len() > k {
            let c = v.pop().unwrap();
            if bf.r_is_zero(&c) {
                continue;
            }
            let d = v.len() - k;
            for j in 0..k {
                let t = bf.r_mul(&c, &m[j]);
                v[d + j] = bf.r_sub(&v[d + j], &t);
            }
        }
        v.resize(k, bf.r_zero());
        v
    }

    pub(crate) fn r_pow(&self, a: &Repr, mut e: u128) -> Repr {
        let mut result = self.r_one();
        let mut sq = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = self.r_mul(&result, &sq);
            }
            e >>= 1;
            if e > 0 {
                sq = self.r_mul(&sq, &sq);
            }
        }
        result
    }

    pub(crate) fn r_inv(&self, a: &Repr) -> GfResult<Repr> {
        if self.r_is_zero(a) {
            return Err(GfError::ZeroInverse);
        }
        Ok(self.r_pow(a, (self.order - 2) as u128))
    }

    pub(crate) fn r_at(&self, idx: u64) -> Repr {
        match &self.base {
            None => Repr::Prime(idx),
            Some(b) => {
                let q = b.order;
                let mut v = Vec::with_capacity(self.degree);
                let mut rest = idx;
                for _ in 0..self.degree {
                    v.push(b.r_at(rest % q));
                    rest /= q;
                }
                Repr::Ext(v)
            }
        }
    }

    pub(crate) fn r_index(&self, a: &Repr) -> u64 {
        match (a, &self.base) {
            (Repr::Prime(v), None) => *v,
            (Repr::Ext(v), Some(b)) => {
                let q = b.order;
                let mut idx = 0u64;
                for c in v.iter().rev() {
                    idx = idx * q + b.r_index(c);
                }
                idx
            }
            _ => unreachable!("representation does not match field"),
        }
    }
}

/// An element of a [`FieldDescriptor`].
#[derive(Clone)]
pub struct FieldElement {
    field: Arc<FieldDescriptor>,
    repr: Repr,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Prime(v) => write!(f, "{v}"),
            Repr::Ext(_) => write!(f, "e{}", self.field.r_index(&self.repr)),
        }
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.repr == other.repr && self.field.same_field(&other.field)
    }
}
impl Eq for FieldElement {}

impl FieldElement {
    pub fn field(&self) -> &Arc<FieldDescriptor> {
        &self.field
    }
    pub fn is_zero(&self) -> bool {
        self.field.r_is_zero(&self.repr)
    }
    pub fn is_one(&self) -> bool {
        self.repr == self.field.r_one()
    }

    /// Residue value for prime-field elements.
    pub fn prime_value(&self) -> Option<u64> {
        match self.repr {
            Repr::Prime(v) => Some(v),
            _ => None,
        }
    }

    /// Coordinates over the base field (extensions only).
    pub fn coords(&self) -> Option<Vec<FieldElement>> {
        match (&self.repr, self.field.base()) {
            (Repr::Ext(v), Some(b)) => {
                Some(v.iter().map(|r| FieldElement { field: b.clone(), repr: r.clone() }).collect())
            }
            _ => None,
        }
    }

    /// Build an extension element from base-field coordinates.
    pub fn from_coords(field: &Arc<FieldDescriptor>, coords: &[FieldElement]) -> GfResult<FieldElement> {
        let base = field.base().ok_or(GfError::FieldMismatch)?;
        if coords.len() != field.degree() {
            return Err(GfError::BadField(format!("expected {} coordinates", field.degree())));
        }
        for c in coords {
            if !c.field.same_field(base) {
                return Err(GfError::FieldMismatch);
            }
        }
        Ok(FieldElement {
            field: field.clone(),
            repr: Repr::Ext(coords.iter().map(|c| c.repr.clone()).collect()),
        })
    }

    fn check_same(&self, other: &FieldElement) -> GfResult<()> {
        if self.field.same_field(&other.field) {
            Ok(())
        } else {
            Err(GfError::FieldMismatch)
        }
    }

    pub fn add(&self, other: &FieldElement) -> FieldElement {
        self.checked_add(other).expect("field mismatch")
    }
    pub fn sub(&self, other: &FieldElement) -> FieldElement {
        self.check_same(other).expect("field mismatch");
        FieldElement { field: self.field.clone(), repr: self.field.r_sub(&self.repr, &other.repr) }
    }
    pub fn neg(&self) -> FieldElement {
        FieldElement { field: self.field.clone(), repr: self.field.r_neg(&self.repr) }
    }
    pub fn mul(&self, other: &FieldElement) -> FieldElement {
        self.checked_mul(other).expect("field mismatch")
    }
    pub fn checked_add(&self, other: &FieldElement) -> GfResult<FieldElement> {
        self.check_same(other)?;
        Ok(FieldElement { field: self.field.clone(), repr: self.field.r_add(&self.repr, &other.repr) })
    }
    pub fn checked_mul(&self, other: &FieldElement) -> GfResult<FieldElement> {
        self.check_same(other)?;
        Ok(FieldElement { field: self.field.clone(), repr: self.field.r_mul(&self.repr, &other.repr) })
    }
    pub fn inv(&self) -> GfResult<FieldElement> {
        Ok(FieldElement { field: self.field.clone(), repr: self.field.r_inv(&self.repr)? })
    }

    /// Integer power with square-and-multiply; negative exponents invert.
    pub fn pow(&self, e: i64) -> GfResult<FieldElement> {
        if e < 0 {
            let inv = self.inv()?;
            Ok(FieldElement {
                field: self.field.clone(),
                repr: self.field.r_pow(&inv.repr, (-(e as i128)) as u128),
            })
        } else {
            Ok(FieldElement { field: self.field.clone(), repr: self.field.r_pow(&self.repr, e as u128) })
        }
    }

    pub fn pow_u128(&self, e: u128) -> FieldElement {
        FieldElement { field: self.field.clone(), repr: self.field.r_pow(&self.repr, e) }
    }

    /// frobenius_power: `a^{q1}` for a subfield order `q1`; fixes
    /// exactly the subfield of order `q1`.
    pub fn frobenius_power(&self, q1: u64) -> GfResult<FieldElement> {
        if !self.field.has_subfield_of_order(q1) {
            return Err(GfError::NotASubfield(q1));
        }
        Ok(self.pow_u128(q1 as u128))
    }

    /// project_to_base: the constant coordinate of an element whose
    /// higher coordinates all vanish.
    pub fn project_to_base(&self) -> GfResult<FieldElement> {
        let base = self.field.base().ok_or(GfError::NotInSubfield)?;
        let Repr::Ext(v) = &self.repr else { unreachable!() };
        for c in &v[1..] {
            if !base.r_is_zero(c) {
                return Err(GfError::NotInSubfield);
            }
        }
        Ok(FieldElement { field: base.clone(), repr: v[0].clone() })
    }

    /// Multiplicative order (element must be nonzero).
    pub fn multiplicative_order(&self) -> GfResult<u64> {
        if self.is_zero() {
            return Err(GfError::ZeroInverse);
        }
        let group = self.field.order() - 1;
        let mut ord = group;
        for (r, _) in factorize(group, 1 << 31)? {
            while ord % r == 0 && self.pow_u128((ord / r) as u128).is_one() {
                ord /= r;
            }
        }
        Ok(ord)
    }
}

/// Trial-division factorization; errors if a divisor beyond `budget` would
/// be needed. Returns (prime, exponent) pairs.
pub(crate) fn factorize(mut x: u64, budget: u64) -> GfResult<Vec<(u64, u32)>> {
    let mut out = Vec::new();
    let mut push = |p: u64, e: u32| {
        if e > 0 {
            out.push((p, e));
        }
    };
    let mut e = 0;
    while x % 2 == 0 {
        x /= 2;
        e += 1;
    }
    push(2, e);
    let mut d = 3u64;
    while d.checked_mul(d).map_or(false, |dd| dd <= x) {
        if d > budget {
            return Err(GfError::BudgetExceeded);
        }
        let mut e = 0;
        while x % d == 0 {
            x /= d;
            e += 1;
        }
        push(d, e);
        d += 2;
    }
    push(x, u32::from(x > 1));
    Ok(out)
}

/// primitive_element: the first element in the fixed ordering whose
/// multiplicative order is `|F| - 1`. Deterministic across runs.
pub fn primitive_element(field: &Arc<FieldDescriptor>) -> GfResult<FieldElement> {
    if let Some(r) = field.primitive.get() {
        return Ok(FieldElement { field: field.clone(), repr: r.clone() });
    }
    let group = field.order() - 1;
    let factors = factorize(group, 1 << 31)?;
    for idx in 0..field.order() {
        let a = field.element_at(idx);
        if a.is_zero() {
            continue;
        }
        if group == 1 {
            let _ = field.primitive.set(a.repr.clone());
            return Ok(a);
        }
        if factors.iter().all(|&(r, _)| !a.pow_u128((group / r) as u128).is_one()) {
            let _ = field.primitive.set(a.repr.clone());
            return Ok(a);
        }
    }
    unreachable!("every finite field has a primitive element")
}

/// nth_root_of_unity: `beta = alpha^{(|F|-1)/n}` of exact order `n`.
pub fn nth_root_of_unity(field: &Arc<FieldDescriptor>, n: u64) -> GfResult<FieldElement> {
    let group = field.order() - 1;
    if n == 0 || group % n != 0 {
        return Err(GfError::NotADivisor(n));
    }
    let alpha = primitive_element(field)?;
    Ok(alpha.pow_u128((group / n) as u128))
}

/// The field of order `q = p^e`, built over its prime field with the
/// deterministic default modulus.
pub fn field_of_order(q: u64) -> GfResult<Arc<FieldDescriptor>> {
    if q < 2 {
        return Err(GfError::BadField(format!("{q} is not a prime power")));
    }
    let factors = factorize(q, 1 << 31)?;
    if factors.len() != 1 {
        return Err(GfError::BadField(format!("{q} is not a prime power")));
    }
    let (p, e) = factors[0];
    let base = FieldDescriptor::prime(p)?;
    if e == 1 {
        Ok(base)
    } else {
        FieldDescriptor::extension(&base, e as usize, None)
    }
}

// ----- polynomial helpers over a base field, used for modulus search -----

pub(crate) fn pv_trim(f: &FieldDescriptor, mut v: Vec<Repr>) -> Vec<Repr> {
    while v.last().map_or(false, |c| f.r_is_zero(c)) {
        v.pop();
    }
    v
}

fn pv_mul(f: &FieldDescriptor, a: &[Repr], b: &[Repr]) -> Vec<Repr> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![f.r_zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if f.r_is_zero(ai) {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            let t = f.r_mul(ai, bj);
            out[i + j] = f.r_add(&out[i + j], &t);
        }
    }
    pv_trim(f, out)
}

/// Remainder modulo a monic polynomial.
fn pv_rem(f: &FieldDescriptor, a: &[Repr], m: &[Repr]) -> Vec<Repr> {
    let dm = m.len() - 1;
    let mut v = a.to_vec();
    while v.len() > dm {
        let c = v.pop().unwrap();
        if f.r_is_zero(&c) {
            continue;
        }
        let off = v.len() - dm;
        for j in 0..dm {
            let t = f.r_mul(&c, &m[j]);
            v[off + j] = f.r_sub(&v[off + j], &t);
        }
    }
    pv_trim(f, v)
}

fn pv_sub(f: &FieldDescriptor, a: &[Repr], b: &[Repr]) -> Vec<Repr> {
    let mut out = vec![f.r_zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] = c.clone();
    }
    for (i, c) in b.iter().enumerate() {
        out[i] = f.r_sub(&out[i], c);
    }
    pv_trim(f, out)
}

fn pv_gcd(f: &FieldDescriptor, a: &[Repr], b: &[Repr]) -> Vec<Repr> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    while !y.is_empty() {
        // make y monic so pv_rem applies
        let lead = y.last().unwrap().clone();
        if lead != f.r_one() {
            let inv = f.r_inv(&lead).unwrap();
            for c in &mut y {
                *c = f.r_mul(c, &inv);
            }
        }
        let r = pv_rem(f, &x, &y);
        x = y;
        y = r;
    }
    x
}

/// `t^q mod m` by square-and-multiply on the exponent.
fn pv_powmod_q(f: &FieldDescriptor, t: &[Repr], q: u64, m: &[Repr]) -> Vec<Repr> {
    let mut result = vec![f.r_one()];
    let mut sq = t.to_vec();
    let mut e = q;
    while e > 0 {
        if e & 1 == 1 {
            result = pv_rem(f, &pv_mul(f, &result, &sq), m);
        }
        e >>= 1;
        if e > 0 {
            sq = pv_rem(f, &pv_mul(f, &sq, &sq), m);
        }
    }
    result
}

/// Rabin irreducibility test for a monic polynomial over `base`.
pub(crate) fn is_irreducible(base: &FieldDescriptor, m: &[Repr]) -> bool {
    let k = m.len() - 1;
    if k == 0 {
        return false;
    }
    if k == 1 {
        return true;
    }
    let q = base.order;
    let x = vec![base.r_zero(), base.r_one()];
    // x^(q^t) mod m for t = 1..k by iterated Frobenius
    let mut t = x.clone();
    let mut frob_at = Vec::with_capacity(k);
    for _ in 0..k {
        t = pv_powmod_q(base, &t, q, m);
        frob_at.push(t.clone());
    }
    if pv_trim(base, pv_sub(base, &frob_at[k - 1], &x)) != Vec::<Repr>::new() {
        return false;
    }
    let mut kk = k;
    let mut primes = Vec::new();
    let mut d = 2;
    while d * d <= kk {
        if kk % d == 0 {
            primes.push(d);
            while kk % d == 0 {
                kk /= d;
            }
        }
        d += 1;
    }
    if kk > 1 {
        primes.push(kk);
    }
    for r in primes {
        let g = pv_gcd(base, &pv_sub(base, &frob_at[k / r - 1], &x), m);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// Deterministic search for the smallest monic irreducible of degree `k`.
fn search_modulus(base: &Arc<FieldDescriptor>, k: usize) -> Vec<Repr> {
    let q = base.order as u128;
    let total = q.checked_pow(k as u32);
    let mut v: u128 = 0;
    loop {
        if let Some(t) = total {
            assert!(v < t, "no irreducible of degree {k} found");
        }
        let mut coeffs = Vec::with_capacity(k + 1);
        let mut rest = v;
        for _ in 0..k {
            coeffs.push(base.r_at((rest % q) as u64));
            rest /= q;
        }
        coeffs.push(base.r_one());
        if is_irreducible(base, &coeffs) {
            return coeffs;
        }
        v += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Arc<FieldDescriptor> {
        FieldDescriptor::prime(2).unwrap()
    }
    fn f4() -> Arc<FieldDescriptor> {
        FieldDescriptor::extension(&f2(), 2, None).unwrap()
    }
    fn f8() -> Arc<FieldDescriptor> {
        FieldDescriptor::extension(&f2(), 3, None).unwrap()
    }

    #[test]
    fn prime_fields() {
        assert_eq!(FieldDescriptor::prime(2).unwrap().order(), 2);
        assert_eq!(FieldDescriptor::prime(5).unwrap().order(), 5);
        assert_eq!(FieldDescriptor::prime(6).unwrap_err(), GfError::NonPrimeModulus(6));
    }

    #[test]
    fn extension_modulus_search() {
        // the only monic irreducible quadratic over F_2 is x^2+x+1
        let f4 = f4();
        assert_eq!(f4.order(), 4);
        let m = f4.modulus().unwrap();
        let vals: Vec<u64> = m.iter().map(|c| c.prime_value().unwrap()).collect();
        assert_eq!(vals, vec![1, 1, 1]);
        // F_8 gets x^3+x+1
        let m8 = f8().modulus().unwrap();
        let vals: Vec<u64> = m8.iter().map(|c| c.prime_value().unwrap()).collect();
        assert_eq!(vals, vec![1, 1, 0, 1]);
    }

    #[test]
    fn reducible_modulus_rejected() {
        let f2 = f2();
        // x^2 + 1 = (x+1)^2 over F_2
        let coeffs = vec![f2.one(), f2.zero(), f2.one()];
        assert_eq!(FieldDescriptor::extension(&f2, 2, Some(&coeffs)).unwrap_err(), GfError::ReducibleModulus);
        // x^3+x+1 is fine
        let coeffs = vec![f2.one(), f2.one(), f2.zero(), f2.one()];
        let f8 = FieldDescriptor::extension(&f2, 3, Some(&coeffs)).unwrap();
        assert_eq!(f8.order(), 8);
    }

    #[test]
    fn f4_arithmetic() {
        let f4 = f4();
        let w = f4.generator();
        let w2 = w.mul(&w);
        // x^2 = x + 1
        assert_eq!(w2, w.add(&f4.one()));
        assert!(w.mul(&w.mul(&w)).is_one());
    }

    #[test]
    fn f5_inverse() {
        let f5 = FieldDescriptor::prime(5).unwrap();
        assert_eq!(f5.from_u64(2).inv().unwrap(), f5.from_u64(3));
        assert_eq!(f5.zero().inv().unwrap_err(), GfError::ZeroInverse);
    }

    #[test]
    fn f8_generator_order() {
        let f8 = f8();
        let a = f8.generator();
        let mut acc = f8.one();
        for _ in 0..7 {
            acc = acc.mul(&a);
        }
        assert!(acc.is_one());
        assert_eq!(a.multiplicative_order().unwrap(), 7);
    }

    #[test]
    fn field_mismatch() {
        let a = f4().generator();
        let b = f8().generator();
        assert_eq!(a.checked_mul(&b).unwrap_err(), GfError::FieldMismatch);
    }

    #[test]
    fn frobenius() {
        let f4 = f4();
        let w = f4.generator();
        assert_eq!(w.frobenius_power(2).unwrap(), w.add(&f4.one()));
        assert!(f4.one().frobenius_power(2).unwrap().is_one());
        // a^64 = a in F_64 over F_4
        let f64 = FieldDescriptor::extension(&f4, 3, None).unwrap();
        for idx in [0, 1, 5, 17, 63] {
            let a = f64.element_at(idx);
            let b = a.frobenius_power(4).unwrap().frobenius_power(4).unwrap().frobenius_power(4).unwrap();
            assert_eq!(a, b);
        }
        assert_eq!(f4.one().frobenius_power(3).unwrap_err(), GfError::NotASubfield(3));
    }

    #[test]
    fn primitive_elements() {
        let f5 = FieldDescriptor::prime(5).unwrap();
        assert_eq!(primitive_element(&f5).unwrap(), f5.from_u64(2));
        let f8 = f8();
        assert_eq!(primitive_element(&f8).unwrap(), f8.generator());
        let f4 = f4();
        assert_eq!(primitive_element(&f4).unwrap(), f4.generator());
        // determinism
        assert_eq!(primitive_element(&f8).unwrap(), primitive_element(&f8).unwrap());
    }

    #[test]
    fn roots_of_unity() {
        let f8 = f8();
        assert_eq!(nth_root_of_unity(&f8, 7).unwrap(), f8.generator());
        assert_eq!(nth_root_of_unity(&f8, 5).unwrap_err(), GfError::NotADivisor(5));
        let f4 = f4();
        let f64 = FieldDescriptor::extension(&f4, 3, None).unwrap();
        let beta = nth_root_of_unity(&f64, 21).unwrap();
        assert_eq!(beta, primitive_element(&f64).unwrap().pow(3).unwrap());
        assert_eq!(beta.multiplicative_order().unwrap(), 21);
    }

    #[test]
    fn projection() {
        let f4 = f4();
        let f64 = FieldDescriptor::extension(&f4, 3, None).unwrap();
        let w = f4.generator();
        let lifted = f64.embed(&w).unwrap();
        assert_eq!(lifted.project_to_base().unwrap(), w);
        assert!(f64.zero().project_to_base().unwrap().is_zero());
        let bad = FieldElement::from_coords(&f64, &[f4.one(), w.clone(), f4.zero()]).unwrap();
        assert_eq!(bad.project_to_base().unwrap_err(), GfError::NotInSubfield);
    }

    #[test]
    fn projection_iff_frobenius_fixed() {
        let f4 = f4();
        let f16 = FieldDescriptor::extension(&f4, 2, None).unwrap();
        for a in f16.elements() {
            let fixed = a.frobenius_power(4).unwrap() == a;
            assert_eq!(a.project_to_base().is_ok(), fixed);
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        let f2 = f2();
        let f8 = f8();
        let fields: Vec<Arc<FieldDescriptor>> = vec![
            f2.clone(),
            FieldDescriptor::prime(3).unwrap(),
            FieldDescriptor::prime(7).unwrap(),
            FieldDescriptor::prime(13).unwrap(),
            f4(),
            f8.clone(),
            FieldDescriptor::extension(&f2, 4, None).unwrap(),
            FieldDescriptor::extension(&FieldDescriptor::prime(3).unwrap(), 2, None).unwrap(),
            FieldDescriptor::extension(&FieldDescriptor::prime(5).unwrap(), 2, None).unwrap(),
            FieldDescriptor::extension(&FieldDescriptor::prime(5).unwrap(), 3, None).unwrap(),
            FieldDescriptor::extension(&f4(), 3, None).unwrap(),
            FieldDescriptor::extension(&f8, 2, None).unwrap(),
            FieldDescriptor::extension(&FieldDescriptor::prime(2).unwrap(), 10, None).unwrap(),
        ];
        for f in &fields {
            assert!(f.order() <= 1 << 10);
            for a in f.elements() {
                assert_eq!(a.pow_u128(f.order() as u128), a);
                if !a.is_zero() {
                    assert!(a.mul(&a.inv().unwrap()).is_one());
                }
            }
        }
    }

    #[test]
    fn frobenius_is_automorphism() {
        for f in [f4(), f8(), FieldDescriptor::extension(&f4(), 2, None).unwrap()] {
            let q1 = f.base().unwrap().order();
            for a in f.elements() {
                for b in f.elements() {
                    let lhs = a.add(&b).frobenius_power(q1).unwrap();
                    let rhs = a.frobenius_power(q1).unwrap().add(&b.frobenius_power(q1).unwrap());
                    assert_eq!(lhs, rhs);
                    let lhs = a.mul(&b).frobenius_power(q1).unwrap();
                    let rhs = a.frobenius_power(q1).unwrap().mul(&b.frobenius_power(q1).unwrap());
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn element_ordering_roundtrip() {
        let f64 = FieldDescriptor::extension(&f4(), 3, None).unwrap();
        for i in 0..64 {
            assert_eq!(f64.index_of(&f64.element_at(i)), i);
        }
    }
}
