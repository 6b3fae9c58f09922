//! Dense univariate polynomials over a [`FiniteField`].
//!
//! This is the workhorse behind rational functions in x, modulus arithmetic
//! in extension fields, root finding over tower floors and univariate
//! factorization. The zero polynomial has an empty coefficient vector;
//! otherwise there are no trailing zeros, so equality is structural.

use super::field::{FiniteField, FqElement};
use super::num::binom_mod_p;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: FiniteField,
    coeffs: Vec<FqElement>,
}

impl std::fmt::Debug for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if self.field.is_zero(c) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c:?}")?;
            if i > 0 {
                write!(f, "*x^{i}")?;
            }
        }
        Ok(())
    }
}

impl Poly {
    pub fn zero(field: FiniteField) -> Self {
        Poly { field, coeffs: Vec::new() }
    }

    pub fn one(field: FiniteField) -> Self {
        let c = field.one();
        Poly { field, coeffs: vec![c] }
    }

    pub fn constant(field: FiniteField, c: FqElement) -> Self {
        let mut p = Poly { field, coeffs: vec![c] };
        p.normalize();
        p
    }

    pub fn x(field: FiniteField) -> Self {
        let coeffs = vec![field.zero(), field.one()];
        Poly { field, coeffs }
    }

    /// Build from coefficients, constant term first; trailing zeros trimmed.
    pub fn from_coeffs(field: FiniteField, coeffs: Vec<FqElement>) -> Self {
        let mut p = Poly { field, coeffs };
        p.normalize();
        p
    }

    pub fn from_u64_coeffs(field: &FiniteField, coeffs: &[u64]) -> Self {
        Poly::from_coeffs(
            field.clone(),
            coeffs.iter().map(|&c| field.from_u64(c)).collect(),
        )
    }

    fn normalize(&mut self) {
        while let Some(last) = self.coeffs.last() {
            if self.field.is_zero(last) {
                self.coeffs.pop();
            } else {
                break;
            }
        }
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn coeffs(&self) -> &[FqElement] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<FqElement> {
        self.coeffs
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> FqElement {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.field.is_one(&self.coeffs[0])
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; -1 for the zero polynomial.
    pub fn deg(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn lc(&self) -> FqElement {
        self.coeffs.last().cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.field.add(&self.coeff(i), &other.coeff(i)));
        }
        Poly::from_coeffs(self.field.clone(), coeffs)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.field.sub(&self.coeff(i), &other.coeff(i)));
        }
        Poly::from_coeffs(self.field.clone(), coeffs)
    }

    pub fn neg(&self) -> Poly {
        Poly {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| self.field.neg(c)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field.clone());
        }
        let f = &self.field;
        let mut coeffs = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if f.is_zero(b) {
                    continue;
                }
                let t = f.mul(a, b);
                coeffs[i + j] = f.add(&coeffs[i + j], &t);
            }
        }
        Poly::from_coeffs(self.field.clone(), coeffs)
    }

    pub fn mul_scalar(&self, c: &FqElement) -> Poly {
        if self.field.is_zero(c) {
            return Poly::zero(self.field.clone());
        }
        Poly {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|a| self.field.mul(a, c)).collect(),
        }
    }

    /// Multiply by x^k.
    pub fn shl(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.field.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { field: self.field.clone(), coeffs }
    }

    /// Quotient and remainder; divisor must be nonzero.
    pub fn divrem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let f = &self.field;
        if self.deg() < divisor.deg() {
            return (Poly::zero(f.clone()), self.clone());
        }
        let lc_inv = f.inv(&divisor.lc());
        let mut rem = self.coeffs.clone();
        let dd = divisor.deg() as usize;
        let mut quot = vec![f.zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if f.is_zero(&rem[i]) {
                continue;
            }
            let q = f.mul(&rem[i], &lc_inv);
            quot[i - dd] = q.clone();
            for (j, dcoef) in divisor.coeffs.iter().enumerate() {
                let t = f.mul(&q, dcoef);
                rem[i - dd + j] = f.sub(&rem[i - dd + j], &t);
            }
        }
        (
            Poly::from_coeffs(f.clone(), quot),
            Poly::from_coeffs(f.clone(), rem),
        )
    }

    pub fn rem(&self, divisor: &Poly) -> Poly {
        self.divrem(divisor).1
    }

    /// Exact division; panics if the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Poly) -> Poly {
        let (q, r) = self.divrem(divisor);
        assert!(r.is_zero(), "division was not exact");
        q
    }

    pub fn make_monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(&self.lc());
        self.mul_scalar(&inv)
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }

    /// Extended gcd: returns (g, u, v) with u*self + v*other = g, g monic.
    pub fn ext_gcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let f = self.field.clone();
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(f.clone()), Poly::zero(f.clone()));
        let (mut t0, mut t1) = (Poly::zero(f.clone()), Poly::one(f.clone()));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = f.inv(&r0.lc());
        (
            r0.mul_scalar(&inv),
            s0.mul_scalar(&inv),
            t0.mul_scalar(&inv),
        )
    }

    /// Inverse of `self` modulo `m`, when coprime.
    pub fn inverse_mod(&self, m: &Poly) -> Option<Poly> {
        let (g, u, _) = self.ext_gcd(m);
        if g.is_one() {
            Some(u.rem(m))
        } else {
            None
        }
    }

    pub fn eval(&self, x: &FqElement) -> FqElement {
        let f = &self.field;
        let mut acc = f.zero();
        for c in self.coeffs.iter().rev() {
            acc = f.mul(&acc, x);
            acc = f.add(&acc, c);
        }
        acc
    }

    /// Evaluate with coefficients embedded into a larger field `ext`.
    pub fn eval_in(&self, ext: &FiniteField, x: &FqElement) -> FqElement {
        let mut acc = ext.zero();
        for c in self.coeffs.iter().rev() {
            acc = ext.mul(&acc, x);
            acc = ext.add(&acc, &ext.embed(&self.field, c));
        }
        acc
    }

    pub fn embed_into(&self, ext: &FiniteField) -> Poly {
        Poly {
            field: ext.clone(),
            coeffs: self.coeffs.iter().map(|c| ext.embed(&self.field, c)).collect(),
        }
    }

    /// Ordinary derivative.
    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero(self.field.clone());
        }
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| f.mul(c, &f.from_u64(i as u64)))
            .collect();
        Poly::from_coeffs(f.clone(), coeffs)
    }

    /// k-th Hasse derivative: sum binom(j, k) c_j x^(j-k).
    pub fn hasse_derivative(&self, k: usize) -> Poly {
        if (self.coeffs.len() as i64) <= k as i64 {
            return Poly::zero(self.field.clone());
        }
        let f = &self.field;
        let p = f.characteristic();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(k)
            .map(|(j, c)| {
                let b = binom_mod_p(j as u64, k as u64, p);
                f.mul(c, &f.from_u64(b))
            })
            .collect();
        Poly::from_coeffs(f.clone(), coeffs)
    }

    /// self^e mod m.
    pub fn pow_mod(&self, mut e: u128, m: &Poly) -> Poly {
        let mut acc = Poly::one(self.field.clone()).rem(m);
        let mut base = self.rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    /// Composition g(h) mod m (Horner).
    pub fn compose_mod(&self, h: &Poly, m: &Poly) -> Poly {
        let f = self.field.clone();
        let mut acc = Poly::zero(f.clone());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(h).rem(m);
            acc = acc.add(&Poly::constant(f.clone(), c.clone()));
        }
        acc
    }

    /// x^(Q^e) mod self, where Q is the field order: e-fold Frobenius of x,
    /// computed by composition squaring to avoid giant exponents.
    pub fn frobenius_power_x(&self, e: u64) -> Poly {
        let q = self.field.order();
        let x = Poly::x(self.field.clone());
        if e == 0 {
            return x.rem(self);
        }
        let base = x.pow_mod(q, self); // x^Q mod self
        // composition chain by binary decomposition of e
        let mut result: Option<Poly> = None;
        let mut sq = base; // x^(Q^(2^i))
        let mut bits = e;
        loop {
            if bits & 1 == 1 {
                result = Some(match result {
                    None => sq.clone(),
                    Some(r) => sq.compose_mod(&r, self),
                });
            }
            bits >>= 1;
            if bits == 0 {
                break;
            }
            sq = sq.compose_mod(&sq.clone(), self);
        }
        result.unwrap()
    }

    /// Irreducibility over the coefficient field (Rabin's test).
    pub fn is_irreducible(&self) -> bool {
        let d = self.deg();
        if d <= 0 {
            return false;
        }
        if d == 1 {
            return true;
        }
        let n = d as u64;
        let m = self.make_monic();
        let x = Poly::x(self.field.clone());
        // x^(Q^n) == x mod m
        if !m.frobenius_power_x(n).sub(&x).rem(&m).is_zero() {
            return false;
        }
        for ell in super::num::prime_divisors(n) {
            let h = m.frobenius_power_x(n / ell).sub(&x);
            if !h.gcd(&m).is_one() {
                return false;
            }
        }
        true
    }

    /// All roots in the coefficient field (each once, ignoring multiplicity).
    pub fn roots(&self) -> Vec<FqElement> {
        if self.is_zero() {
            panic!("roots of the zero polynomial");
        }
        let f = self.field.clone();
        if self.deg() == 0 {
            return Vec::new();
        }
        // linear-factor part: gcd(self, x^Q - x)
        let m = self.make_monic();
        let frob = m.frobenius_power_x(1);
        let lin = frob.sub(&Poly::x(f.clone())).gcd(&m);
        let mut out = Vec::new();
        split_linear(&lin, &mut out);
        out.sort_by_key(|r| f.element_index(r));
        out.dedup();
        out
    }

    /// Lagrange interpolation through distinct points.
    pub fn interpolate(field: &FiniteField, points: &[(FqElement, FqElement)]) -> Poly {
        let mut acc = Poly::zero(field.clone());
        for (i, (xi, yi)) in points.iter().enumerate() {
            let mut num = Poly::constant(field.clone(), yi.clone());
            let mut den = field.one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                let lin = Poly::from_coeffs(
                    field.clone(),
                    vec![field.neg(xj), field.one()],
                );
                num = num.mul(&lin);
                den = field.mul(&den, &field.sub(xi, xj));
            }
            acc = acc.add(&num.mul_scalar(&field.inv(&den)));
        }
        acc
    }

    pub fn random(field: &FiniteField, deg: usize, rng: &mut impl rand::Rng) -> Poly {
        let mut coeffs: Vec<FqElement> = (0..deg).map(|_| field.random(rng)).collect();
        // force exact degree with a nonzero leading coefficient
        loop {
            let c = field.random(rng);
            if !field.is_zero(&c) {
                coeffs.push(c);
                break;
            }
        }
        Poly::from_coeffs(field.clone(), coeffs)
    }
}

/// Split a monic product of distinct linear factors into roots.
fn split_linear(f: &Poly, out: &mut Vec<FqElement>) {
    let field = f.field().clone();
    let d = f.deg();
    if d <= 0 {
        return;
    }
    if d == 1 {
        // x + c -> root -c
        out.push(field.neg(&f.coeff(0)));
        return;
    }
    let q = field.order();
    let p = field.characteristic();
    // Cantor-Zassenhaus style splitting
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(
        0x5eed ^ (d as u64).wrapping_mul(0x9e3779b97f4a7c15),
    );
    for _ in 0..200 {
        let r = Poly::random(&field, 1, &mut rng);
        let g = if p == 2 {
            // trace map T(r) = r + r^2 + r^4 + ... over F_{2^k}
            let mut acc = r.clone().rem(f);
            let mut t = r.clone().rem(f);
            let k = field.degree();
            for _ in 1..k {
                t = t.mul(&t.clone()).rem(f);
                acc = acc.add(&t);
            }
            acc.gcd(f)
        } else {
            let e = (q - 1) / 2;
            let s = r.pow_mod(e, f);
            s.sub(&Poly::one(field.clone())).gcd(f)
        };
        if g.deg() > 0 && g.deg() < d {
            let h = f.exact_div(&g);
            split_linear(&g, out);
            split_linear(&h, out);
            return;
        }
    }
    panic!("equal-degree splitting did not converge");
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7() -> FiniteField {
        FiniteField::galois(7, 1).unwrap()
    }

    #[test]
    fn divrem_roundtrip() {
        let f = f7();
        let a = Poly::from_u64_coeffs(&f, &[1, 2, 0, 3, 5]);
        let b = Poly::from_u64_coeffs(&f, &[2, 1, 4]);
        let (q, r) = a.divrem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.deg() < b.deg());
    }

    #[test]
    fn gcd_and_inverse() {
        let f = f7();
        let m = Poly::from_u64_coeffs(&f, &[1, 0, 1]); // x^2 + 1, irreducible over F_7? -1 = 6, squares mod 7: 1,2,4 -> yes irreducible
        assert!(m.is_irreducible());
        let a = Poly::from_u64_coeffs(&f, &[3, 1]);
        let inv = a.inverse_mod(&m).unwrap();
        assert!(a.mul(&inv).rem(&m).is_one());
    }

    #[test]
    fn hasse_power_rule() {
        let f = FiniteField::galois(5, 1).unwrap();
        // D^(k) x^n = binom(n,k) x^(n-k)
        let xn = Poly::from_u64_coeffs(&f, &[0, 0, 0, 0, 0, 0, 0, 1]); // x^7
        let d2 = xn.hasse_derivative(2);
        // binom(7,2) = 21 = 1 mod 5
        assert_eq!(d2, Poly::from_u64_coeffs(&f, &[0, 0, 0, 0, 0, 1]));
    }

    #[test]
    fn roots_of_split_poly() {
        let f = FiniteField::galois(5, 1).unwrap();
        // (x-1)(x-2)(x-3) over F_5
        let p = Poly::from_u64_coeffs(&f, &[4, 0, 1])
            .mul(&Poly::from_u64_coeffs(&f, &[2, 1]));
        let mut roots = p.roots();
        roots.sort_by_key(|r| f.element_index(r));
        assert_eq!(roots.len(), 3);
    }

    #[test]
    fn irreducibility_examples() {
        let f3 = FiniteField::galois(3, 1).unwrap();
        assert!(Poly::from_u64_coeffs(&f3, &[1, 0, 1]).is_irreducible()); // x^2+1 over F_3
        assert!(!Poly::from_u64_coeffs(&f3, &[2, 0, 1]).is_irreducible()); // x^2+2 = (x+1)(x+2)
        let f9 = FiniteField::galois(3, 2).unwrap();
        // x^2 + 1 splits over F_9
        let p = Poly::from_u64_coeffs(&f9, &[1, 0, 1]);
        assert!(!p.is_irreducible());
        assert_eq!(p.roots().len(), 2);
    }

    #[test]
    fn interpolation() {
        let f = f7();
        let pts: Vec<_> = (0..5u64)
            .map(|i| {
                let x = f.from_u64(i);
                // y = x^3 + 2x + 1
                let y = f.add(
                    &f.add(&f.pow(&x, 3), &f.mul(&f.from_u64(2), &x)),
                    &f.one(),
                );
                (x, y)
            })
            .collect();
        let p = Poly::interpolate(&f, &pts);
        assert_eq!(p, Poly::from_u64_coeffs(&f, &[1, 2, 0, 1]));
    }
}
