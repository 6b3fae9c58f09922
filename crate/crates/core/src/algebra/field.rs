//! Prime-power finite fields and their elements.
//!
//! A [`FiniteField`] is either a prime field F_p or an extension of another
//! field by a monic irreducible polynomial. Elements do not carry a field
//! reference; all arithmetic goes through the field handle, which is cheap to
//! clone. Moduli are chosen deterministically (lowest weight, then smallest
//! coefficient tuple) so serialized elements reproduce across runs.

use std::fmt;
use std::sync::Arc;

use super::num::{self, add_mod, inv_mod, is_prime, mul_mod, sub_mod};
use super::poly::Poly;
use super::{AlgebraError, Result};

/// An element of a [`FiniteField`]: a residue for prime fields, a coefficient
/// vector over the base field (of fixed length = step degree) for extensions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FqElement {
    Prime(u64),
    Ext(Vec<FqElement>),
}

impl fmt::Debug for FqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FqElement::Prime(r) => write!(f, "{r}"),
            FqElement::Ext(v) => {
                write!(f, "[")?;
                for (i, c) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c:?}")?;
                }
                write!(f, "]")
            }
        }
    }
}

struct FieldRepr {
    p: u64,
    /// `None` for the prime field.
    base: Option<FiniteField>,
    /// Monic modulus over the base field, length `step_degree + 1`. Empty for
    /// the prime field.
    modulus: Vec<FqElement>,
    step_degree: usize,
    degree_over_prime: u64,
    /// p^degree_over_prime.
    order: u128,
}

/// Handle to a finite field; clones share the same representation.
#[derive(Clone)]
pub struct FiniteField(Arc<FieldRepr>);

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.0, &other.0) {
            return true;
        }
        self.0.p == other.0.p
            && self.0.modulus == other.0.modulus
            && self.0.base == other.0.base
    }
}
impl Eq for FiniteField {}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.0.p, self.0.degree_over_prime)
    }
}

impl FiniteField {
    /// The prime field F_p.
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(AlgebraError::NonPrime(p));
        }
        if p >= 1 << 31 {
            return Err(AlgebraError::Overflow(format!("prime {p} exceeds the size policy")));
        }
        Ok(FiniteField(Arc::new(FieldRepr {
            p,
            base: None,
            modulus: Vec::new(),
            step_degree: 1,
            degree_over_prime: 1,
            order: p as u128,
        })))
    }

    /// F_{p^h} with the deterministically chosen modulus. This is the
    /// `field_make` operation; `h = 1` yields the prime field itself (whose
    /// reported modulus is X).
    pub fn galois(p: u64, h: u32) -> Result<Self> {
        if h == 0 {
            return Err(AlgebraError::DegreeZero);
        }
        let base = FiniteField::prime(p)?;
        if h == 1 {
            return Ok(base);
        }
        base.extend(h as usize)
    }

    /// Extend by the canonical (lowest-weight, lexicographically first) monic
    /// irreducible polynomial of degree `k`.
    pub fn extend(&self, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(AlgebraError::DegreeZero);
        }
        if k == 1 {
            return Ok(self.clone());
        }
        let modulus = self.canonical_irreducible(k)?;
        self.extend_with(modulus)
    }

    /// Extend by a caller-supplied monic irreducible modulus (coefficients
    /// over `self`, constant term first, length `k + 1`).
    pub fn extend_with(&self, modulus: Vec<FqElement>) -> Result<Self> {
        let k = modulus.len() - 1;
        if k == 0 {
            return Err(AlgebraError::DegreeZero);
        }
        assert!(
            modulus.last() == Some(&self.one()),
            "modulus must be monic"
        );
        let mpoly = Poly::from_coeffs(self.clone(), modulus.clone());
        if !mpoly.is_irreducible() {
            return Err(AlgebraError::Overflow(format!(
                "supplied modulus of degree {k} is reducible"
            )));
        }
        let degree_over_prime = self.0.degree_over_prime * k as u64;
        let order = self
            .0
            .order
            .checked_pow(k as u32)
            .filter(|o| *o < 1u128 << 96)
            .ok_or_else(|| AlgebraError::Overflow("field order".into()))?;
        Ok(FiniteField(Arc::new(FieldRepr {
            p: self.0.p,
            base: Some(self.clone()),
            modulus,
            step_degree: k,
            degree_over_prime,
            order,
        })))
    }

    /// Deterministic irreducible search: candidates ordered by the number of
    /// nonzero lower coefficients, then by the coefficient tuple (constant
    /// term first, each coefficient by its canonical index).
    fn canonical_irreducible(&self, k: usize) -> Result<Vec<FqElement>> {
        let q = self.order();
        for weight in 0..=k {
            let mut candidates: Vec<Vec<u128>> = Vec::new();
            let positions = combinations(k, weight);
            for pos in positions {
                let mut values = vec![1u128; weight];
                loop {
                    let mut tuple = vec![0u128; k];
                    for (i, &pidx) in pos.iter().enumerate() {
                        tuple[pidx] = values[i];
                    }
                    candidates.push(tuple);
                    // odometer over nonzero element indices
                    let mut j = weight;
                    loop {
                        if j == 0 {
                            break;
                        }
                        j -= 1;
                        values[j] += 1;
                        if values[j] < q {
                            break;
                        }
                        values[j] = 1;
                        if j == 0 {
                            values.clear();
                            break;
                        }
                    }
                    if values.is_empty() {
                        break;
                    }
                }
                if candidates.len() > 4_000_000 {
                    return Err(AlgebraError::NoIrreducible(k));
                }
            }
            candidates.sort();
            for tuple in candidates {
                let mut coeffs: Vec<FqElement> =
                    tuple.iter().map(|&i| self.element_from_index(i)).collect();
                coeffs.push(self.one());
                let cand = Poly::from_coeffs(self.clone(), coeffs.clone());
                if cand.is_irreducible() {
                    return Ok(coeffs);
                }
            }
        }
        Err(AlgebraError::NoIrreducible(k))
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    /// Degree over the prime field.
    pub fn degree(&self) -> u64 {
        self.0.degree_over_prime
    }

    /// Extension degree over the immediate base field.
    pub fn step_degree(&self) -> usize {
        self.0.step_degree
    }

    pub fn base_field(&self) -> Option<&FiniteField> {
        self.0.base.as_ref()
    }

    /// Number of elements, p^degree.
    pub fn order(&self) -> u128 {
        self.0.order
    }

    /// The defining modulus over the base field (X for a prime field),
    /// constant term first.
    pub fn modulus(&self) -> Vec<FqElement> {
        if self.0.base.is_none() {
            vec![FqElement::Prime(0), FqElement::Prime(1)]
        } else {
            self.0.modulus.clone()
        }
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.base.is_none()
    }

    pub fn zero(&self) -> FqElement {
        match &self.0.base {
            None => FqElement::Prime(0),
            Some(b) => FqElement::Ext(vec![b.zero(); self.0.step_degree]),
        }
    }

    pub fn one(&self) -> FqElement {
        self.from_u64(1)
    }

    /// The integer `n mod p`, embedded.
    pub fn from_u64(&self, n: u64) -> FqElement {
        match &self.0.base {
            None => FqElement::Prime(n % self.0.p),
            Some(b) => {
                let mut v = vec![b.zero(); self.0.step_degree];
                v[0] = b.from_u64(n);
                FqElement::Ext(v)
            }
        }
    }

    /// Signed variant of [`from_u64`](Self::from_u64).
    pub fn from_i64(&self, n: i64) -> FqElement {
        let p = self.0.p as i64;
        self.from_u64(n.rem_euclid(p) as u64)
    }

    pub fn is_zero(&self, a: &FqElement) -> bool {
        match a {
            FqElement::Prime(r) => *r == 0,
            FqElement::Ext(v) => {
                let b = self.base();
                v.iter().all(|c| b.is_zero(c))
            }
        }
    }

    pub fn is_one(&self, a: &FqElement) -> bool {
        *a == self.one()
    }

    fn base(&self) -> &FiniteField {
        self.0.base.as_ref().expect("extension field")
    }

    pub fn add(&self, a: &FqElement, b: &FqElement) -> FqElement {
        match (a, b) {
            (FqElement::Prime(x), FqElement::Prime(y)) => {
                FqElement::Prime(add_mod(*x, *y, self.0.p))
            }
            (FqElement::Ext(x), FqElement::Ext(y)) => {
                let base = self.base();
                FqElement::Ext(x.iter().zip(y).map(|(u, v)| base.add(u, v)).collect())
            }
            _ => panic!("mixed element shapes"),
        }
    }

    pub fn sub(&self, a: &FqElement, b: &FqElement) -> FqElement {
        match (a, b) {
            (FqElement::Prime(x), FqElement::Prime(y)) => {
                FqElement::Prime(sub_mod(*x, *y, self.0.p))
            }
            (FqElement::Ext(x), FqElement::Ext(y)) => {
                let base = self.base();
                FqElement::Ext(x.iter().zip(y).map(|(u, v)| base.sub(u, v)).collect())
            }
            _ => panic!("mixed element shapes"),
        }
    }

    pub fn neg(&self, a: &FqElement) -> FqElement {
        match a {
            FqElement::Prime(x) => FqElement::Prime(if *x == 0 { 0 } else { self.0.p - *x }),
            FqElement::Ext(x) => {
                let base = self.base();
                FqElement::Ext(x.iter().map(|u| base.neg(u)).collect())
            }
        }
    }

    pub fn mul(&self, a: &FqElement, b: &FqElement) -> FqElement {
        match (a, b) {
            (FqElement::Prime(x), FqElement::Prime(y)) => {
                FqElement::Prime(mul_mod(*x, *y, self.0.p))
            }
            (FqElement::Ext(x), FqElement::Ext(y)) => {
                let base = self.base();
                let k = self.0.step_degree;
                let mut prod = vec![base.zero(); 2 * k - 1];
                for (i, xi) in x.iter().enumerate() {
                    if base.is_zero(xi) {
                        continue;
                    }
                    for (j, yj) in y.iter().enumerate() {
                        if base.is_zero(yj) {
                            continue;
                        }
                        let t = base.mul(xi, yj);
                        prod[i + j] = base.add(&prod[i + j], &t);
                    }
                }
                // reduce by the monic modulus
                for d in (k..prod.len()).rev() {
                    if base.is_zero(&prod[d]) {
                        continue;
                    }
                    let c = prod[d].clone();
                    prod[d] = base.zero();
                    for (j, mj) in self.0.modulus.iter().take(k).enumerate() {
                        if !base.is_zero(mj) {
                            let t = base.mul(&c, mj);
                            prod[d - k + j] = base.sub(&prod[d - k + j], &t);
                        }
                    }
                }
                prod.truncate(k);
                FqElement::Ext(prod)
            }
            _ => panic!("mixed element shapes"),
        }
    }

    /// Multiplicative inverse; panics on zero (callers test first).
    pub fn inv(&self, a: &FqElement) -> FqElement {
        assert!(!self.is_zero(a), "inverse of zero");
        match a {
            FqElement::Prime(x) => FqElement::Prime(inv_mod(*x, self.0.p)),
            FqElement::Ext(x) => {
                let base = self.base();
                let ap = Poly::from_coeffs(base.clone(), x.clone());
                let m = Poly::from_coeffs(base.clone(), self.0.modulus.clone());
                let inv = ap.inverse_mod(&m).expect("unit in a field");
                let mut v = inv.into_coeffs();
                v.resize(self.0.step_degree, base.zero());
                FqElement::Ext(v)
            }
        }
    }

    pub fn div(&self, a: &FqElement, b: &FqElement) -> FqElement {
        self.mul(a, &self.inv(b))
    }

    pub fn pow(&self, a: &FqElement, mut e: u128) -> FqElement {
        if self.is_zero(a) {
            return if e == 0 { self.one() } else { self.zero() };
        }
        let grp = self.0.order - 1;
        e %= grp;
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// a^(p^r), the r-fold characteristic Frobenius.
    pub fn frobenius(&self, a: &FqElement, r: u64) -> FqElement {
        if self.is_zero(a) {
            return self.zero();
        }
        let grp = self.0.order - 1;
        let e = pow_mod_u128(self.0.p as u128, r, grp);
        self.pow(a, e)
    }

    /// Inverse of Frobenius: the unique p-th root.
    pub fn p_th_root(&self, a: &FqElement) -> FqElement {
        self.frobenius(a, self.0.degree_over_prime - 1)
    }

    /// True iff `a` lies in the subfield fixed by x -> x^(q0^i), i.e. in
    /// F_{q0^i} ∩ this field.
    pub fn fixed_by_power(&self, a: &FqElement, q0: u128, i: u32) -> bool {
        let grp = self.0.order - 1;
        if self.is_zero(a) {
            return true;
        }
        let mut e = 1u128;
        for _ in 0..i {
            e = (e * (q0 % grp)) % grp;
        }
        self.pow(a, e) == *a
    }

    /// Embed an element of the immediate base field.
    pub fn embed_from_base(&self, a: &FqElement) -> FqElement {
        let base = self.base();
        let mut v = vec![base.zero(); self.0.step_degree];
        v[0] = a.clone();
        FqElement::Ext(v)
    }

    /// Embed from any field on the chain below `self`.
    pub fn embed(&self, from: &FiniteField, a: &FqElement) -> FqElement {
        if self == from {
            return a.clone();
        }
        let base = self.base();
        self.embed_from_base(&base.embed(from, a))
    }

    /// Project to the immediate base field when the element lies there.
    pub fn project_to_base(&self, a: &FqElement) -> Option<FqElement> {
        match a {
            FqElement::Ext(v) => {
                let base = self.base();
                if v[1..].iter().all(|c| base.is_zero(c)) {
                    Some(v[0].clone())
                } else {
                    None
                }
            }
            FqElement::Prime(_) => None,
        }
    }

    /// Project to any field on the chain below `self`.
    pub fn project(&self, to: &FiniteField, a: &FqElement) -> Option<FqElement> {
        if self == to {
            return Some(a.clone());
        }
        let below = self.project_to_base(a)?;
        self.base().project(to, &below)
    }

    /// Canonical index of an element in 0..order (base-q digits of the
    /// coefficient tower); used for deterministic orderings.
    pub fn element_index(&self, a: &FqElement) -> u128 {
        match a {
            FqElement::Prime(r) => *r as u128,
            FqElement::Ext(v) => {
                let base = self.base();
                let q = base.order();
                let mut acc = 0u128;
                for c in v.iter().rev() {
                    acc = acc * q + base.element_index(c);
                }
                acc
            }
        }
    }

    pub fn element_from_index(&self, mut idx: u128) -> FqElement {
        match &self.0.base {
            None => FqElement::Prime((idx % self.0.p as u128) as u64),
            Some(base) => {
                let q = base.order();
                let mut v = Vec::with_capacity(self.0.step_degree);
                for _ in 0..self.0.step_degree {
                    v.push(base.element_from_index(idx % q));
                    idx /= q;
                }
                FqElement::Ext(v)
            }
        }
    }

    pub fn random(&self, rng: &mut impl rand::Rng) -> FqElement {
        match &self.0.base {
            None => FqElement::Prime(rng.gen_range(0..self.0.p)),
            Some(base) => FqElement::Ext(
                (0..self.0.step_degree).map(|_| base.random(rng)).collect(),
            ),
        }
    }

    /// All field elements in canonical index order. Only for small fields.
    pub fn elements(&self) -> impl Iterator<Item = FqElement> + '_ {
        (0..self.order()).map(move |i| self.element_from_index(i))
    }

    /// A generator of the multiplicative group (smallest by index).
    pub fn multiplicative_generator(&self) -> FqElement {
        let grp = (self.0.order - 1) as u128;
        let primes: Vec<u128> = prime_divisors_u128(grp);
        'cand: for i in 1..self.order() {
            let g = self.element_from_index(i);
            if self.is_zero(&g) {
                continue;
            }
            for ell in &primes {
                if self.pow(&g, grp / ell) == self.one() {
                    continue 'cand;
                }
            }
            return g;
        }
        unreachable!("cyclic group has a generator")
    }
}

fn pow_mod_u128(mut a: u128, mut e: u64, m: u128) -> u128 {
    // m < 2^96; use checked widening via splitting if needed. Orders are
    // capped below 2^96 so a*b can overflow u128; do mulmod by schoolbook.
    fn mulmod(a: u128, b: u128, m: u128) -> u128 {
        if let (Some(prod), true) = (a.checked_mul(b), true) {
            return prod % m;
        }
        // double-and-add fallback
        let mut acc = 0u128;
        let mut a = a % m;
        let mut b = b;
        while b > 0 {
            if b & 1 == 1 {
                acc = (acc + a) % m;
            }
            a = (a << 1) % m;
            b >>= 1;
        }
        acc
    }
    let mut acc = 1u128 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, m);
        }
        a = mulmod(a, a, m);
        e >>= 1;
    }
    acc
}

fn prime_divisors_u128(mut n: u128) -> Vec<u128> {
    let mut out = Vec::new();
    let mut d = 2u128;
    while d * d <= n && d < 1 << 20 {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        // residual factor may be composite for huge orders; treating it as
        // prime only makes the generator search more conservative.
        if n < u64::MAX as u128 && is_prime(n as u64) {
            out.push(n);
        } else {
            out.push(n);
        }
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(idx.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_make_examples() {
        // (5, 1) -> F_5, modulus X
        let f5 = FiniteField::galois(5, 1).unwrap();
        assert_eq!(f5.order(), 5);
        assert_eq!(
            f5.modulus(),
            vec![FqElement::Prime(0), FqElement::Prime(1)]
        );

        // (3, 2) -> F_9 with modulus X^2 + 1
        let f9 = FiniteField::galois(3, 2).unwrap();
        assert_eq!(f9.order(), 9);
        assert_eq!(
            f9.modulus(),
            vec![FqElement::Prime(1), FqElement::Prime(0), FqElement::Prime(1)]
        );

        // (4, 1) -> NonPrime
        assert_eq!(FiniteField::galois(4, 1).unwrap_err(), AlgebraError::NonPrime(4));
        assert_eq!(FiniteField::galois(5, 0).unwrap_err(), AlgebraError::DegreeZero);
    }

    #[test]
    fn frobenius_examples() {
        let f5 = FiniteField::galois(5, 1).unwrap();
        let a = f5.from_u64(3);
        assert_eq!(f5.frobenius(&a, 0), a);

        let f9 = FiniteField::galois(3, 2).unwrap();
        for i in 0..9 {
            let a = f9.element_from_index(i);
            // p^2 = q fixes F_9 pointwise
            assert_eq!(f9.frobenius(&a, 2), a);
        }
        let g = f9.multiplicative_generator();
        assert_eq!(f9.frobenius(&g, 1), f9.pow(&g, 3));
    }

    #[test]
    fn arithmetic_roundtrip_f9() {
        let f9 = FiniteField::galois(3, 2).unwrap();
        for i in 1..9 {
            let a = f9.element_from_index(i);
            let inv = f9.inv(&a);
            assert_eq!(f9.mul(&a, &inv), f9.one());
        }
        // a^q = a for all elements
        for i in 0..9 {
            let a = f9.element_from_index(i);
            assert_eq!(f9.pow(&a, 9), a);
        }
    }

    #[test]
    fn tower_embedding_roundtrip() {
        let f9 = FiniteField::galois(3, 2).unwrap();
        let f81 = f9.extend(2).unwrap();
        for i in 0..9 {
            let a = f9.element_from_index(i);
            let up = f81.embed(&f9, &a);
            assert_eq!(f81.project(&f9, &up), Some(a));
        }
        // embedding is a ring hom
        let a = f9.element_from_index(5);
        let b = f9.element_from_index(7);
        assert_eq!(
            f81.embed(&f9, &f9.mul(&a, &b)),
            f81.mul(&f81.embed(&f9, &a), &f81.embed(&f9, &b))
        );
    }

    #[test]
    fn freshman_dream() {
        let f25 = FiniteField::galois(5, 2).unwrap();
        let mut rng = rand::rngs::mock::StepRng::new(42, 1013904223);
        for _ in 0..200 {
            let a = f25.random(&mut rng);
            let b = f25.random(&mut rng);
            let lhs = f25.pow(&f25.add(&a, &b), 5);
            let rhs = f25.add(&f25.pow(&a, 5), &f25.pow(&b, 5));
            assert_eq!(lhs, rhs);
        }
    }
}
