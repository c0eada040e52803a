//! Cyclic codes as generator polynomials (simple-root and repeated-root),
//! linear codes as generator matrices, Euclidean and Hermitian duals,
//! dual-containing and self-dual predicates, quadratic-residue codes, and
//! matrix-level rank and orthogonality utilities.

use std::sync::Arc;
use thiserror::Error;

use crate::cyclo::{self, CycloError, CyclotomicPartition, DefiningSet};
use crate::gf::{FieldDescriptor, FieldElement, GfError};
use crate::polyring::{self, PolyError, Polynomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("the zero polynomial generates no cyclic code")]
    ZeroPolynomial,
    #[error("field order {0} is not a perfect square")]
    NotASquareField(u64),
    #[error("vector length does not match the code")]
    LengthMismatch,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("bad length: {0}")]
    BadLength(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Gf(#[from] GfError),
    #[error(transparent)]
    Cyclo(#[from] CycloError),
}

pub type CodeResult<T> = Result<T, CodeError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DualityMode {
    Euclidean,
    Hermitian,
}

/// Integer square root of the field order, when exact.
pub fn square_subfield_order(field: &FieldDescriptor) -> Option<u64> {
    let q = field.order();
    let r = (q as f64).sqrt().round() as u64;
    for c in [r.saturating_sub(1), r, r + 1] {
        if c >= 2 && c * c == q && field.has_subfield_of_order(c) {
            return Some(c);
        }
    }
    None
}

// ----- matrix utilities -----

/// Row-reduce in place to reduced row-echelon form; returns pivot columns.
/// Zero rows are removed.
pub(crate) fn rref(rows: &mut Vec<Vec<FieldElement>>) -> Vec<usize> {
    if rows.is_empty() {
        return Vec::new();
    }
    let n = rows[0].len();
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for col in 0..n {
        let Some(sel) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, sel);
        let inv = rows[r][col].inv().expect("pivot is nonzero");
        for c in col..n {
            rows[r][c] = rows[r][c].mul(&inv);
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                for c in col..n {
                    let t = f.mul(&rows[r][c]);
                    rows[i][c] = rows[i][c].sub(&t);
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub(crate) fn inner_product(
    x: &[FieldElement],
    y: &[FieldElement],
    mode: DualityMode,
    q1: u64,
) -> FieldElement {
    let field = x[0].field().clone();
    let mut acc = field.zero();
    for (a, b) in x.iter().zip(y) {
        let b = match mode {
            DualityMode::Euclidean => b.clone(),
            DualityMode::Hermitian => b.frobenius_power(q1).expect("q1 is a subfield order"),
        };
        acc = acc.add(&a.mul(&b));
    }
    acc
}

/// A linear code given by a generator matrix. The reduced row-echelon form
/// is cached so code equality (as sets) reduces to canonical-form equality.
#[derive(Debug, Clone)]
pub struct LinearCode {
    field: Arc<FieldDescriptor>,
    n: usize,
    gen: Vec<Vec<FieldElement>>,
    rref: Vec<Vec<FieldElement>>,
    pivots: Vec<usize>,
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.field.same_field(&other.field) && self.rref == other.rref
    }
}

impl LinearCode {
    pub fn from_rows(
        field: &Arc<FieldDescriptor>,
        n: usize,
        rows: Vec<Vec<FieldElement>>,
    ) -> CodeResult<LinearCode> {
        for row in &rows {
            if row.len() != n {
                return Err(CodeError::LengthMismatch);
            }
            for c in row {
                if !c.field().same_field(field) {
                    return Err(CodeError::FieldMismatch);
                }
            }
        }
        let mut reduced = rows.clone();
        let pivots = rref(&mut reduced);
        Ok(LinearCode { field: field.clone(), n, gen: rows, rref: reduced, pivots })
    }

    pub fn field(&self) -> &Arc<FieldDescriptor> {
        &self.field
    }
    pub fn n(&self) -> usize {
        self.n
    }
    /// Dimension (rank of the generator matrix).
    pub fn k(&self) -> usize {
        self.rref.len()
    }
    pub fn rows(&self) -> &[Vec<FieldElement>] {
        &self.gen
    }
    pub fn rref_rows(&self) -> &[Vec<FieldElement>] {
        &self.rref
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// encode: message * G (rows as given, not the canonical form).
    pub fn encode(&self, message: &[FieldElement]) -> CodeResult<Vec<FieldElement>> {
        if message.len() != self.gen.len() {
            return Err(CodeError::LengthMismatch);
        }
        let mut out = vec![self.field.zero(); self.n];
        for (m, row) in message.iter().zip(&self.gen) {
            if m.is_zero() {
                continue;
            }
            for (o, c) in out.iter_mut().zip(row) {
                *o = o.add(&m.mul(c));
            }
        }
        Ok(out)
    }

    /// Membership test by reduction against the canonical form.
    pub fn contains(&self, word: &[FieldElement]) -> bool {
        if word.len() != self.n {
            return false;
        }
        let mut w = word.to_vec();
        for (row, &p) in self.rref.iter().zip(&self.pivots) {
            if !w[p].is_zero() {
                let f = w[p].clone();
                for (wc, rc) in w.iter_mut().zip(row) {
                    let t = f.mul(rc);
                    *wc = wc.sub(&t);
                }
            }
        }
        w.iter().all(|c| c.is_zero())
    }

    /// is_self_dual_linear: even length, dimension n/2, and every pair
    /// of generator rows (self-pairs included) orthogonal under the chosen
    /// inner product.
    pub fn is_self_dual_linear(&self, mode: DualityMode) -> bool {
        if self.n % 2 != 0 || self.k() * 2 != self.n {
            return false;
        }
        let q1 = match mode {
            DualityMode::Euclidean => 1,
            DualityMode::Hermitian => match square_subfield_order(&self.field) {
                Some(q1) => q1,
                None => return false,
            },
        };
        for i in 0..self.rref.len() {
            for j in i..self.rref.len() {
                if !inner_product(&self.rref[i], &self.rref[j], mode, q1).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Generator matrix of the (Euclidean or Hermitian) dual code, via the
    /// standard-form parity construction on the canonical form.
    pub fn dual(&self, mode: DualityMode) -> CodeResult<LinearCode> {
        let k = self.k();
        let n = self.n;
        let q1 = match mode {
            DualityMode::Euclidean => 1,
            DualityMode::Hermitian => {
                square_subfield_order(&self.field).ok_or(CodeError::NotASquareField(self.field.order()))?
            }
        };
        // columns not in the pivot set parameterize the dual
        let non_pivots: Vec<usize> = (0..n).filter(|c| !self.pivots.contains(c)).collect();
        let mut rows = Vec::with_capacity(n - k);
        for &f in &non_pivots {
            let mut row = vec![self.field.zero(); n];
            row[f] = self.field.one();
            for (ri, &p) in self.pivots.iter().enumerate() {
                // Euclidean: parity row entry -G[ri][f]; Hermitian dual of C
                // is (C^perp)^{q1}, handled by powering afterwards.
                row[p] = self.rref[ri][f].neg();
            }
            if mode == DualityMode::Hermitian {
                for c in &mut row {
                    *c = c.frobenius_power(q1)?;
                }
            }
            rows.push(row);
        }
        LinearCode::from_rows(&self.field, n, rows)
    }
}

/// A cyclic code: field, length, and the canonical monic generator
/// polynomial dividing x^N - 1.
#[derive(Debug, Clone, PartialEq)]
pub struct CyclicCode {
    field: Arc<FieldDescriptor>,
    length: usize,
    generator: Polynomial,
}

impl CyclicCode {
    /// cyclic_from_polynomial: the ideal (f) has canonical generator
    /// gcd(x^N - 1, f), which also covers repeated-root lengths where f
    /// itself need not divide x^N - 1.
    pub fn from_polynomial(
        field: &Arc<FieldDescriptor>,
        length: usize,
        f: &Polynomial,
    ) -> CodeResult<CyclicCode> {
        if f.is_zero() {
            return Err(CodeError::ZeroPolynomial);
        }
        if !f.field().same_field(field) {
            return Err(CodeError::FieldMismatch);
        }
        let xn = Polynomial::xn_minus_one(field, length);
        let g = xn.gcd(f);
        Ok(CyclicCode { field: field.clone(), length, generator: g })
    }

    pub fn field(&self) -> &Arc<FieldDescriptor> {
        &self.field
    }
    pub fn length(&self) -> usize {
        self.length
    }
    pub fn generator(&self) -> &Polynomial {
        &self.generator
    }
    pub fn dim(&self) -> usize {
        self.length - self.generator.degree().expect("generator is nonzero")
    }

    pub fn check_polynomial(&self) -> Polynomial {
        Polynomial::xn_minus_one(&self.field, self.length)
            .exact_div(&self.generator)
            .expect("generator divides x^N - 1")
    }

    /// dual_generator: the normalized reciprocal of the check
    /// polynomial. Dual of the whole space is the zero code and vice versa.
    pub fn dual_generator(&self) -> Polynomial {
        self.check_polynomial()
            .reciprocal_normalized()
            .expect("check polynomial has nonzero constant term")
    }

    /// hermitian_dual_generator: dual generator with coefficients
    /// raised to the q1-th power, where the field order is q1^2.
    pub fn hermitian_dual_generator(&self) -> CodeResult<Polynomial> {
        let q1 = square_subfield_order(&self.field)
            .ok_or(CodeError::NotASquareField(self.field.order()))?;
        Ok(self.dual_generator().coefficientwise_power(q1)?)
    }

    pub fn dual_generator_for(&self, mode: DualityMode) -> CodeResult<Polynomial> {
        match mode {
            DualityMode::Euclidean => Ok(self.dual_generator()),
            DualityMode::Hermitian => self.hermitian_dual_generator(),
        }
    }

    pub fn dual_code(&self, mode: DualityMode) -> CodeResult<CyclicCode> {
        Ok(CyclicCode {
            field: self.field.clone(),
            length: self.length,
            generator: self.dual_generator_for(mode)?,
        })
    }

    /// Whether this length has simple roots (gcd(N, char) = 1).
    pub fn simple_root(&self) -> bool {
        cyclo::gcd_u64(self.length as u64, self.field.characteristic()) == 1
    }

    /// Defining set with respect to the canonical n-th root of unity
    /// (simple-root lengths only).
    pub fn defining_set(&self) -> CodeResult<DefiningSet> {
        let (_, beta) = polyring::splitting_field(&self.field, self.length as u64)?;
        Ok(cyclo::defining_set_of(&self.generator, &beta, self.length as u64)?)
    }

    /// is_dual_containing: true iff the (Hermitian) dual generator is
    /// divisible by g. For simple-root codes the defining-set criterion
    /// (T and its inverse image are disjoint) is computed as well and the
    /// two must agree.
    pub fn is_dual_containing(&self, mode: DualityMode) -> CodeResult<bool> {
        let dual_gen = self.dual_generator_for(mode)?;
        let by_division = self.generator.divides(&dual_gen);
        if self.simple_root() {
            let t = self.defining_set()?;
            let image = match mode {
                DualityMode::Euclidean => t.inverse_set(),
                DualityMode::Hermitian => {
                    let q1 = square_subfield_order(&self.field)
                        .ok_or(CodeError::NotASquareField(self.field.order()))?;
                    t.q1_inverse_set(q1)
                }
            };
            let by_sets = t.intersection(&image).is_empty();
            assert_eq!(by_division, by_sets, "divisibility and defining-set criteria disagree");
        }
        Ok(by_division)
    }

    /// is_self_dual_cyclic: g equals its own (Hermitian) dual
    /// generator.
    pub fn is_self_dual_cyclic(&self, mode: DualityMode) -> CodeResult<bool> {
        Ok(self.generator == self.dual_generator_for(mode)?)
    }

    /// generator_matrix: row i = coefficients of x^i g(x).
    pub fn generator_matrix(&self) -> LinearCode {
        let k = self.dim();
        let g = &self.generator;
        let mut rows = Vec::with_capacity(k);
        for i in 0..k {
            let mut row = vec![self.field.zero(); self.length];
            for (j, c) in g.coeffs().iter().enumerate() {
                row[i + j] = c.clone();
            }
            rows.push(row);
        }
        LinearCode::from_rows(&self.field, self.length, rows).expect("shift rows are well formed")
    }

    /// Membership: the word's polynomial is divisible by the generator.
    pub fn contains(&self, word: &[FieldElement]) -> bool {
        if word.len() != self.length {
            return false;
        }
        let p = Polynomial::new(self.field.clone(), word.to_vec());
        self.generator.divides(&p)
    }
}

/// check_thm71_criterion: (a) no cyclotomic coset contains both a and
/// n - a, and (b) no a with both a and n - a in T. When both hold the code
/// with defining set T is Euclidean dual-containing.
pub fn check_thm71_criterion(t: &DefiningSet, partition: &CyclotomicPartition) -> bool {
    let n = partition.n();
    for coset in partition.cosets() {
        for &a in coset {
            // a = 0 always pairs with itself and is covered by (b)
            if a != 0 && coset.binary_search(&((n - a) % n)).is_ok() {
                return false;
            }
        }
    }
    for &a in t.residues() {
        if t.contains((n - a) % n) {
            return false;
        }
    }
    true
}

/// qr_code: binary odd-like quadratic-residue code for prime
/// n = 7 (mod 8); the defining set is fixed to the quadratic residues.
pub fn qr_code(n: u64) -> CodeResult<CyclicCode> {
    let prime = {
        let mut is_p = n >= 2;
        let mut d = 2u64;
        while d * d <= n {
            if n % d == 0 {
                is_p = false;
                break;
            }
            d += 1;
        }
        is_p
    };
    if !prime || n % 8 != 7 {
        return Err(CodeError::BadLength(format!("{n} is not a prime congruent to 7 mod 8")));
    }
    let f2 = FieldDescriptor::prime(2)?;
    let (_, beta) = polyring::splitting_field(&f2, n)?;
    let mut qr = vec![false; n as usize];
    for i in 1..n {
        qr[((i as u128 * i as u128) % n as u128) as usize] = true;
    }
    let partition = cyclo::cyclotomic_cosets(2, n)?;
    let mut g = Polynomial::one(&f2);
    for coset in partition.cosets() {
        if coset[0] != 0 && qr[coset[0] as usize] {
            // 2 is a QR mod n, so cosets are QR-homogeneous
            debug_assert!(coset.iter().all(|&i| qr[i as usize]));
            g = g.mul(&polyring::minimal_polynomial(&f2, &beta, coset)?);
        }
    }
    CyclicCode::from_polynomial(&f2, n as usize, &g)
}
