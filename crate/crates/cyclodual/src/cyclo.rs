//! q-cyclotomic cosets modulo n, defining-set algebra, multiplicative
//! orders, and closed-form gcd identities for powers.

use thiserror::Error;

use crate::gf::FieldElement;
use crate::polyring::{Polynomial, PolyError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycloError {
    #[error("{0} and {1} are not coprime")]
    NotCoprime(u64, u64),
    #[error("polynomial does not divide x^n - 1")]
    NotADivisor,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

pub type CycloResult<T> = Result<T, CycloError>;

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// ord_mod: least l >= 1 with q^l = 1 (mod n).
pub fn ord_mod(n: u64, q: u64) -> CycloResult<u64> {
    if gcd_u64(n, q) != 1 {
        return Err(CycloError::NotCoprime(n, q));
    }
    if n == 1 {
        return Ok(1);
    }
    let mut l = 1u64;
    let mut acc = q % n;
    while acc != 1 {
        acc = ((acc as u128 * q as u128) % n as u128) as u64;
        l += 1;
    }
    Ok(l)
}

/// The q-cyclotomic cosets of Z_n with their leaders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicPartition {
    n: u64,
    q: u64,
    cosets: Vec<Vec<u64>>,
    leaders: Vec<u64>,
}

impl CyclotomicPartition {
    pub fn n(&self) -> u64 {
        self.n
    }
    pub fn q(&self) -> u64 {
        self.q
    }
    pub fn cosets(&self) -> &[Vec<u64>] {
        &self.cosets
    }
    pub fn leaders(&self) -> &[u64] {
        &self.leaders
    }
    pub fn coset_of(&self, i: u64) -> Option<&Vec<u64>> {
        self.cosets.iter().find(|c| c.binary_search(&(i % self.n)).is_ok())
    }
}

/// cyclotomic_cosets: full partition of Z_n, leaders ascending.
pub fn cyclotomic_cosets(q: u64, n: u64) -> CycloResult<CyclotomicPartition> {
    if gcd_u64(q, n) != 1 {
        return Err(CycloError::NotCoprime(q, n));
    }
    if n == 1 {
        return Ok(CyclotomicPartition { n, q, cosets: vec![vec![0]], leaders: vec![0] });
    }
    let mut seen = vec![false; n as usize];
    let mut cosets = Vec::new();
    let mut leaders = Vec::new();
    for i in 0..n {
        if seen[i as usize] {
            continue;
        }
        let mut coset = Vec::new();
        let mut j = i;
        loop {
            seen[j as usize] = true;
            coset.push(j);
            j = ((j as u128 * q as u128) % n as u128) as u64;
            if j == i {
                break;
            }
        }
        coset.sort_unstable();
        leaders.push(i);
        cosets.push(coset);
    }
    Ok(CyclotomicPartition { n, q, cosets, leaders })
}

/// A defining set T of a cyclic code: a sorted residue set modulo n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefiningSet {
    n: u64,
    residues: Vec<u64>,
}

impl DefiningSet {
    pub fn new(n: u64, mut residues: Vec<u64>) -> DefiningSet {
        for r in &mut residues {
            *r %= n;
        }
        residues.sort_unstable();
        residues.dedup();
        DefiningSet { n, residues }
    }

    pub fn n(&self) -> u64 {
        self.n
    }
    pub fn residues(&self) -> &[u64] {
        &self.residues
    }
    pub fn len(&self) -> usize {
        self.residues.len()
    }
    pub fn is_empty(&self) -> bool {
        self.residues.is_empty()
    }
    pub fn contains(&self, i: u64) -> bool {
        self.residues.binary_search(&(i % self.n)).is_ok()
    }

    /// T^{-1} = { n - i : i in T } mod n.
    pub fn inverse_set(&self) -> DefiningSet {
        DefiningSet::new(self.n, self.residues.iter().map(|&i| (self.n - i) % self.n).collect())
    }

    /// T^{-q1} = { (n - q1 i) mod n : i in T }.
    pub fn q1_inverse_set(&self, q1: u64) -> DefiningSet {
        let n = self.n as u128;
        DefiningSet::new(
            self.n,
            self.residues
                .iter()
                .map(|&i| ((n - (q1 as u128 * i as u128) % n) % n) as u64)
                .collect(),
        )
    }

    /// T^c = Z_n \ T.
    pub fn complement(&self) -> DefiningSet {
        DefiningSet::new(self.n, (0..self.n).filter(|i| !self.contains(*i)).collect())
    }

    pub fn intersection(&self, other: &DefiningSet) -> DefiningSet {
        DefiningSet::new(
            self.n,
            self.residues.iter().copied().filter(|&i| other.contains(i)).collect(),
        )
    }

    pub fn is_union_of_cosets(&self, partition: &CyclotomicPartition) -> bool {
        partition
            .cosets()
            .iter()
            .all(|c| c.iter().all(|i| self.contains(*i)) || c.iter().all(|i| !self.contains(*i)))
    }
}

/// gcd_lemma: closed form for gcd(q^a ± 1, q^b - 1).
/// sign = -1 gives gcd(q^a - 1, q^b - 1) = q^gcd(a,b) - 1;
/// sign = +1 gives gcd(q^a + 1, q^b - 1), which is q^gcd(a,b) + 1 when
/// b/gcd(a,b) is even, and otherwise 1 for even q or 2 for odd q.
pub fn gcd_lemma(q: u64, a: u32, b: u32, sign: i8) -> u128 {
    assert!(q >= 2 && a >= 1 && b >= 1);
    let g = gcd_u64(a as u64, b as u64) as u32;
    let qg = (q as u128).pow(g);
    match sign {
        -1 => qg - 1,
        1 => {
            if (b / g) % 2 == 0 {
                qg + 1
            } else if q % 2 == 0 {
                1
            } else {
                2
            }
        }
        _ => panic!("sign must be +1 or -1"),
    }
}

/// defining_set_of: { i in Z_n : g(beta^i) = 0 } for a divisor g of
/// x^n - 1 and an n-th root of unity beta.
pub fn defining_set_of(g: &Polynomial, beta: &FieldElement, n: u64) -> CycloResult<DefiningSet> {
    let xn = Polynomial::xn_minus_one(g.field(), n as usize);
    if !g.divides(&xn) {
        return Err(CycloError::NotADivisor);
    }
    let mut residues = Vec::new();
    for i in 0..n {
        let v = g.eval_in(&beta.pow_u128(i as u128))?;
        if v.is_zero() {
            residues.push(i);
        }
    }
    Ok(DefiningSet::new(n, residues))
}
