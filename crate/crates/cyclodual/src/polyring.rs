//! Dense univariate polynomial arithmetic over any field descriptor,
//! reciprocal polynomials, minimal polynomials of root powers, and the
//! factorization of x^n - 1 into minimal polynomials.

use std::fmt;
use std::sync::Arc;
use thiserror::Error;

use crate::cyclo;
use crate::gf::{nth_root_of_unity, FieldDescriptor, FieldElement, GfError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("polynomial division left a nonzero remainder")]
    NotDivisible,
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("coefficient does not lie in the base field (input set not Frobenius-closed?)")]
    CoefficientNotInBase,
    #[error("length shares a factor with the field characteristic")]
    NotCoprime,
    #[error("polynomials belong to different fields")]
    FieldMismatch,
    #[error(transparent)]
    Gf(#[from] GfError),
}

pub type PolyResult<T> = Result<T, PolyError>;

/// Dense polynomial, coefficients ascending by degree. The zero polynomial
/// is the empty coefficient vector.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    field: Arc<FieldDescriptor>,
    coeffs: Vec<FieldElement>,
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (c.is_one(), i) {
                (true, 0) => write!(f, "1")?,
                (true, 1) => write!(f, "x")?,
                (true, _) => write!(f, "x^{i}")?,
                (false, 0) => write!(f, "{c:?}")?,
                (false, 1) => write!(f, "{c:?}*x")?,
                (false, _) => write!(f, "{c:?}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Polynomial {
    pub fn new(field: Arc<FieldDescriptor>, mut coeffs: Vec<FieldElement>) -> Polynomial {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { field, coeffs }
    }

    pub fn zero(field: &Arc<FieldDescriptor>) -> Polynomial {
        Polynomial { field: field.clone(), coeffs: Vec::new() }
    }
    pub fn one(field: &Arc<FieldDescriptor>) -> Polynomial {
        Polynomial { field: field.clone(), coeffs: vec![field.one()] }
    }
    pub fn constant(c: FieldElement) -> Polynomial {
        Polynomial::new(c.field().clone(), vec![c])
    }
    pub fn x(field: &Arc<FieldDescriptor>) -> Polynomial {
        Polynomial { field: field.clone(), coeffs: vec![field.zero(), field.one()] }
    }

    /// x^n - 1 over `field`.
    pub fn xn_minus_one(field: &Arc<FieldDescriptor>, n: usize) -> Polynomial {
        let mut coeffs = vec![field.zero(); n + 1];
        coeffs[0] = field.one().neg();
        coeffs[n] = field.one();
        Polynomial { field: field.clone(), coeffs }
    }

    /// Convenience for prime fields: build from integer residues.
    pub fn from_ints(field: &Arc<FieldDescriptor>, vals: &[u64]) -> Polynomial {
        Polynomial::new(field.clone(), vals.iter().map(|&v| field.from_u64(v)).collect())
    }

    pub fn field(&self) -> &Arc<FieldDescriptor> {
        &self.field
    }
    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }
    pub fn leading(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }
    pub fn is_monic(&self) -> bool {
        self.leading().map_or(false, |c| c.is_one())
    }

    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => self.clone(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => {
                let inv = l.inv().expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        Polynomial::new(self.field.clone(), self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    fn check_same(&self, other: &Polynomial) -> PolyResult<()> {
        if self.field.same_field(&other.field) {
            Ok(())
        } else {
            Err(PolyError::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.check_same(other).expect("field mismatch");
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).add(&other.coeff(i)));
        }
        Polynomial::new(self.field.clone(), out)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.check_same(other).expect("field mismatch");
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).sub(&other.coeff(i)));
        }
        Polynomial::new(self.field.clone(), out)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.check_same(other).expect("field mismatch");
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Polynomial::new(self.field.clone(), out)
    }

    /// Quotient and remainder with deg(rem) < deg(divisor).
    pub fn divrem(&self, divisor: &Polynomial) -> PolyResult<(Polynomial, Polynomial)> {
        self.check_same(divisor)?;
        let dd = divisor.degree().ok_or(PolyError::DivisionByZero)?;
        let lead_inv = divisor.leading().unwrap().inv().expect("nonzero leading");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Polynomial::zero(&self.field), self.clone()));
        }
        let mut quot = vec![self.field.zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let c = rem[i].mul(&lead_inv);
            quot[i - dd] = c.clone();
            for j in 0..=dd {
                let t = c.mul(&divisor.coeffs[j]);
                rem[i - dd + j] = rem[i - dd + j].sub(&t);
            }
        }
        Ok((Polynomial::new(self.field.clone(), quot), Polynomial::new(self.field.clone(), rem)))
    }

    pub fn rem(&self, divisor: &Polynomial) -> PolyResult<Polynomial> {
        Ok(self.divrem(divisor)?.1)
    }

    pub fn divides(&self, other: &Polynomial) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).map_or(false, |r| r.is_zero())
    }

    pub fn exact_div(&self, divisor: &Polynomial) -> PolyResult<Polynomial> {
        let (q, r) = self.divrem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(PolyError::NotDivisible)
        }
    }

    /// Monic gcd; gcd(f, 0) = monic(f).
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        self.check_same(other).expect("field mismatch");
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Monic lcm = f*g / gcd(f, g).
    pub fn lcm(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.field);
        }
        let g = self.gcd(other);
        self.mul(other).exact_div(&g).expect("gcd divides product").monic()
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::one(&self.field);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Evaluate by Horner's rule at a point in the same field.
    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        let mut acc = x.field().zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Evaluate at a point in an extension of the coefficient field,
    /// embedding the coefficients.
    pub fn eval_in(&self, x: &FieldElement) -> PolyResult<FieldElement> {
        let ext = x.field();
        if ext.same_field(&self.field) {
            return Ok(self.eval(x));
        }
        let mut acc = ext.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(&ext.embed(c)?);
        }
        Ok(acc)
    }

    /// reciprocal_normalized: x^{deg f} f(1/x) / f(0).
    pub fn reciprocal_normalized(&self) -> PolyResult<Polynomial> {
        if self.is_zero() || self.coeffs[0].is_zero() {
            return Err(PolyError::ZeroConstantTerm);
        }
        let inv0 = self.coeffs[0].inv().expect("nonzero constant term");
        let mut rev: Vec<FieldElement> = self.coeffs.iter().rev().map(|c| c.mul(&inv0)).collect();
        while rev.last().map_or(false, |c| c.is_zero()) {
            rev.pop();
        }
        Ok(Polynomial::new(self.field.clone(), rev))
    }

    /// coefficientwise_power: each coefficient raised to the q1-th
    /// power, q1 a subfield order.
    pub fn coefficientwise_power(&self, q1: u64) -> PolyResult<Polynomial> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.frobenius_power(q1))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Polynomial::new(self.field.clone(), coeffs))
    }
}

/// minimal_polynomial: expand prod_{j in coset} (x - beta^j) in the
/// ambient field and project every coefficient down to the base field.
/// The input set must be a full q-cyclotomic coset for the projection to
/// succeed.
pub fn minimal_polynomial(
    field: &Arc<FieldDescriptor>,
    beta: &FieldElement,
    coset: &[u64],
) -> PolyResult<Polynomial> {
    let ambient = beta.field().clone();
    let mut prod = Polynomial::one(&ambient);
    for &j in coset {
        let root = beta.pow_u128(j as u128);
        let factor = Polynomial::new(ambient.clone(), vec![root.neg(), ambient.one()]);
        prod = prod.mul(&factor);
    }
    if ambient.same_field(field) {
        return Ok(prod);
    }
    // descend from the splitting field to the requested coefficient field
    match ambient.base() {
        Some(base) if base.same_field(field) => {
            let coeffs = prod
                .coeffs
                .iter()
                .map(|c| c.project_to_base().map_err(|_| PolyError::CoefficientNotInBase))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Polynomial::new(field.clone(), coeffs))
        }
        _ => Err(PolyError::CoefficientNotInBase),
    }
}

/// Ambient field F_{q^m} with m = ord_n(q), built as a direct degree-m
/// extension of `field` (the field itself when m = 1), plus the canonical
/// n-th root of unity in it.
pub fn splitting_field(
    field: &Arc<FieldDescriptor>,
    n: u64,
) -> PolyResult<(Arc<FieldDescriptor>, FieldElement)> {
    let q = field.order();
    if n == 0 || crate::cyclo::gcd_u64(n, field.characteristic()) != 1 {
        return Err(PolyError::NotCoprime);
    }
    let m = if n == 1 { 1 } else { cyclo::ord_mod(n, q).map_err(|_| PolyError::NotCoprime)? };
    let ambient = if m == 1 { field.clone() } else { FieldDescriptor::extension(field, m as usize, None)? };
    let beta = nth_root_of_unity(&ambient, n)?;
    Ok((ambient, beta))
}

/// factor_xn_minus_1: one minimal polynomial per q-cyclotomic coset
/// leader, ascending by leader; the product of the factors is x^n - 1.
pub fn factor_xn_minus_1(
    field: &Arc<FieldDescriptor>,
    n: u64,
) -> PolyResult<Vec<(u64, Polynomial)>> {
    let (_, beta) = splitting_field(field, n)?;
    let partition = cyclo::cyclotomic_cosets(field.order(), n).map_err(|_| PolyError::NotCoprime)?;
    let mut out = Vec::with_capacity(partition.cosets().len());
    for coset in partition.cosets() {
        let mp = minimal_polynomial(field, &beta, coset)?;
        // coefficients live in the extension's base = `field` (or `field`
        // itself when m = 1)
        out.push((coset[0], mp));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Arc<FieldDescriptor> {
        FieldDescriptor::prime(2).unwrap()
    }

    #[test]
    fn multiply_factors_of_x7_plus_1() {
        let f2 = f2();
        let a = Polynomial::from_ints(&f2, &[1, 1, 0, 1]); // x^3+x+1
        let b = Polynomial::from_ints(&f2, &[1, 1, 1, 0, 1]); // x^4+x^2+x+1
        assert_eq!(a.mul(&b), Polynomial::xn_minus_one(&f2, 7));
    }

    #[test]
    fn gcd_examples() {
        let f2 = f2();
        let x7 = Polynomial::xn_minus_one(&f2, 7);
        let g1 = Polynomial::from_ints(&f2, &[1, 1, 0, 1]);
        let g2 = Polynomial::from_ints(&f2, &[1, 1]);
        let f = g1.pow(2).mul(&g2);
        assert_eq!(x7.gcd(&f), g1.mul(&g2));
        // gcd with zero
        let z = Polynomial::zero(&f2);
        assert_eq!(g1.gcd(&z), g1.clone());
    }

    #[test]
    fn divrem_invariants() {
        let f2 = f2();
        let a = Polynomial::from_ints(&f2, &[1, 0, 1, 1, 1, 0, 1]);
        let b = Polynomial::from_ints(&f2, &[1, 1, 1]);
        let (q, r) = a.divrem(&b).unwrap();
        assert!(r.degree().map_or(true, |d| d < 2));
        assert_eq!(q.mul(&b).add(&r), a);
        assert_eq!(a.divrem(&Polynomial::zero(&f2)).unwrap_err(), PolyError::DivisionByZero);
    }

    #[test]
    fn reciprocal() {
        let f2 = f2();
        let f = Polynomial::from_ints(&f2, &[1, 1, 1, 0, 1]);
        let r = f.reciprocal_normalized().unwrap();
        assert_eq!(r, Polynomial::from_ints(&f2, &[1, 0, 1, 1, 1]));
        // palindrome fixed
        let p = Polynomial::from_ints(&f2, &[1, 0, 1]);
        assert_eq!(p.reciprocal_normalized().unwrap(), p);
        // x has zero constant term
        let x = Polynomial::x(&f2);
        assert_eq!(x.reciprocal_normalized().unwrap_err(), PolyError::ZeroConstantTerm);
    }

    #[test]
    fn reciprocal_involution_exhaustive() {
        // all monic f over F_2 with f(0) != 0, deg <= 10
        let f2 = f2();
        for deg in 1..=10usize {
            for bits in 0..(1u64 << (deg - 1)) {
                let mut vals = vec![1u64];
                for i in 0..deg - 1 {
                    vals.push((bits >> i) & 1);
                }
                vals.push(1);
                let f = Polynomial::from_ints(&f2, &vals);
                let r = f.reciprocal_normalized().unwrap();
                assert_eq!(r.reciprocal_normalized().unwrap(), f);
            }
        }
    }

    #[test]
    fn coefficientwise_power_f4() {
        let f2 = f2();
        let f4 = FieldDescriptor::extension(&f2, 2, None).unwrap();
        let w = f4.generator();
        let f = Polynomial::new(f4.clone(), vec![w.clone(), f4.one()]);
        let g = f.coefficientwise_power(2).unwrap();
        assert_eq!(g.coeff(0), w.add(&f4.one()));
        assert_eq!(g.coefficientwise_power(2).unwrap(), f);
        // identity over F_2
        let h = Polynomial::from_ints(&f2, &[1, 1, 0, 1]);
        assert_eq!(h.coefficientwise_power(2).unwrap(), h);
    }

    #[test]
    fn minimal_polynomials_n7() {
        let f2 = f2();
        let f8 = FieldDescriptor::extension(&f2, 3, None).unwrap();
        let beta = nth_root_of_unity(&f8, 7).unwrap();
        let m1 = minimal_polynomial(&f2, &beta, &[1, 2, 4]).unwrap();
        assert_eq!(m1, Polynomial::from_ints(&f2, &[1, 1, 0, 1]));
        let m0 = minimal_polynomial(&f2, &beta, &[0]).unwrap();
        assert_eq!(m0, Polynomial::from_ints(&f2, &[1, 1]));
        assert_eq!(
            minimal_polynomial(&f2, &beta, &[1, 2]).unwrap_err(),
            PolyError::CoefficientNotInBase
        );
        // the same coset expanded over the ambient field itself is fine
        assert!(minimal_polynomial(&f8, &beta, &[1, 2]).is_ok());
    }

    #[test]
    fn factorization_n7() {
        let f2 = f2();
        let factors = factor_xn_minus_1(&f2, 7).unwrap();
        let leaders: Vec<u64> = factors.iter().map(|(l, _)| *l).collect();
        assert_eq!(leaders, vec![0, 1, 3]);
        assert_eq!(factors[0].1, Polynomial::from_ints(&f2, &[1, 1]));
        assert_eq!(factors[1].1, Polynomial::from_ints(&f2, &[1, 1, 0, 1]));
        assert_eq!(factors[2].1, Polynomial::from_ints(&f2, &[1, 0, 1, 1]));
    }

    #[test]
    fn factorization_edges() {
        let f2 = f2();
        let fs = factor_xn_minus_1(&f2, 1).unwrap();
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].1, Polynomial::from_ints(&f2, &[1, 1]));
        assert_eq!(factor_xn_minus_1(&f2, 14).unwrap_err(), PolyError::NotCoprime);
    }

    #[test]
    fn factorization_reconstructs() {
        for (p, k, ns) in [
            (2u64, 1usize, vec![7u64, 9, 15, 21, 23, 31, 45, 63, 73, 89]),
            (2, 2, vec![3, 5, 15, 17, 21, 51, 63, 85]),
            (2, 3, vec![7, 9, 21, 63, 73]),
            (5, 1, vec![2, 3, 4, 6, 8, 12, 24, 31, 62, 93]),
        ] {
            let prime = FieldDescriptor::prime(p).unwrap();
            let field = if k == 1 { prime } else { FieldDescriptor::extension(&prime, k, None).unwrap() };
            for &n in &ns {
                let factors = factor_xn_minus_1(&field, n).unwrap();
                let mut prod = Polynomial::one(&field);
                for (_, f) in &factors {
                    assert!(f.is_monic());
                    prod = prod.mul(f);
                }
                assert_eq!(prod, Polynomial::xn_minus_one(&field, n as usize), "q={} n={n}", field.order());
                // pairwise coprime
                for i in 0..factors.len() {
                    for j in i + 1..factors.len() {
                        assert_eq!(factors[i].1.gcd(&factors[j].1), Polynomial::one(&field));
                    }
                }
            }
        }
    }

    #[test]
    fn factors_are_irreducible() {
        // each factor equals the minimal polynomial of any of its roots
        let f2 = f2();
        for n in [7u64, 15, 31] {
            let (ambient, beta) = splitting_field(&f2, n).unwrap();
            let _ = ambient;
            let partition = crate::cyclo::cyclotomic_cosets(2, n).unwrap();
            for (leader, f) in factor_xn_minus_1(&f2, n).unwrap() {
                let coset = partition.coset_of(leader).unwrap();
                for &j in coset {
                    assert!(f.eval_in(&beta.pow_u128(j as u128)).unwrap().is_zero());
                }
                assert_eq!(f.degree(), Some(coset.len()));
            }
        }
    }

    #[test]
    fn reciprocal_multiplicative() {
        let f2 = f2();
        let f = Polynomial::from_ints(&f2, &[1, 1, 0, 1]);
        let g = Polynomial::from_ints(&f2, &[1, 0, 1, 1]);
        let lhs = f.mul(&g).reciprocal_normalized().unwrap();
        let rhs = f.reciprocal_normalized().unwrap().mul(&g.reciprocal_normalized().unwrap());
        assert_eq!(lhs, rhs);
    }
}
