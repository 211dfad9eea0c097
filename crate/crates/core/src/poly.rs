//! Univariate polynomials over the working field, just enough for
//! minimal-polynomial bookkeeping: gcds, derivatives, and coprime
//! splittings derived from multiplicity structure.

use crate::field::{FieldSpec, Scalar};

/// Coefficients low degree first; normalised so the last coefficient is
/// nonzero (the zero polynomial has an empty coefficient list).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    field: FieldSpec,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: FieldSpec, mut coeffs: Vec<Scalar>) -> Poly {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn constant_coeff_is_zero(&self) -> bool {
        self.coeffs.first().is_none_or(|c| self.field.is_zero(c))
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let f = self.field;
        let inv = f.inv(self.coeffs.last().unwrap()).unwrap();
        Poly::new(
            f,
            self.coeffs.iter().map(|c| f.mul(c, &inv)).collect(),
        )
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let f = self.field;
        let mut acc = f.zero();
        for c in self.coeffs.iter().rev() {
            acc = f.add(&f.mul(&acc, x), c);
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        let f = self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| f.mul(&f.int(i as i64), c))
            .collect();
        Poly::new(f, coeffs)
    }

    /// Euclidean division, (quotient, remainder).
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let f = self.field;
        let mut rem = self.coeffs.clone();
        let dn = d.degree();
        let lead_inv = f.inv(d.coeffs.last().unwrap()).unwrap();
        if rem.len() <= dn {
            return (Poly::new(f, vec![]), Poly::new(f, rem));
        }
        let mut quot = vec![f.zero(); rem.len() - dn];
        while rem.len() > dn && !rem.is_empty() {
            let k = rem.len() - 1;
            let c = f.mul(&rem[k], &lead_inv);
            if !f.is_zero(&c) {
                quot[k - dn] = c.clone();
                for (i, dc) in d.coeffs.iter().enumerate() {
                    let idx = k - dn + i;
                    rem[idx] = f.sub(&rem[idx], &f.mul(&c, dc));
                }
            }
            rem.pop();
        }
        (Poly::new(f, quot), Poly::new(f, rem))
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Exact quotient; panics if the division is not exact.
    pub fn exact_div(&self, d: &Poly) -> Poly {
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// A nontrivial coprime factorisation self = u·v with gcd(u, v) = 1,
    /// if the multiplicity structure exposes one (no irreducible
    /// factorisation is attempted). `u` collects the multiplicity-one
    /// primes; valid in any characteristic.
    pub fn coprime_split(&self) -> Option<(Poly, Poly)> {
        if self.degree() < 2 {
            return None;
        }
        let mut mu = self.monic();
        // In characteristic p a vanishing derivative means mu = nu(t^p),
        // and over the prime field nu(t^p) = nu(t)^p coefficientwise;
        // descend before reading multiplicities.
        if let FieldSpec::PrimeField(p) = self.field {
            while !mu.is_zero() && mu.derivative().is_zero() && mu.degree() > 0 {
                let p = p as usize;
                let mut desc = Vec::new();
                for (i, c) in mu.coeffs.iter().enumerate() {
                    if i % p == 0 {
                        desc.push(c.clone());
                    } else if !self.field.is_zero(c) {
                        return None;
                    }
                }
                mu = Poly::new(self.field, desc);
            }
        }
        if mu.degree() < 2 {
            return None;
        }
        let g = mu.gcd(&mu.derivative());
        if g.degree() == 0 {
            return None;
        }
        // u := the part of the squarefree radical coprime to g, i.e. the
        // product of primes appearing with multiplicity exactly one.
        let mut u = mu.exact_div(&g);
        loop {
            let d = u.gcd(&g);
            if d.degree() == 0 {
                break;
            }
            u = u.exact_div(&d);
        }
        if u.degree() == 0 || u.degree() == mu.degree() {
            return None;
        }
        let v = mu.exact_div(&u);
        Some((u, v))
    }

    /// Roots of the polynomial among the given candidates.
    pub fn roots_among(&self, candidates: &[Scalar]) -> Vec<Scalar> {
        candidates
            .iter()
            .filter(|c| self.field.is_zero(&self.eval(c)))
            .cloned()
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn poly(coeffs: &[i64]) -> Poly {
        Poly::new(q(), coeffs.iter().map(|&c| q().int(c)).collect())
    }

    #[test]
    fn division_and_gcd() {
        // (t-1)(t-2) = t^2 - 3t + 2
        let p = poly(&[2, -3, 1]);
        let d = poly(&[-1, 1]);
        let (quot, rem) = p.div_rem(&d);
        assert!(rem.is_zero());
        assert_eq!(quot, poly(&[-2, 1]));
        assert_eq!(p.gcd(&d), d.monic());
    }

    #[test]
    fn coprime_split_by_multiplicity() {
        // (t-1)^2 (t-2): multiplicity-one part is (t-2).
        let p = poly(&[-2, 5, -4, 1]);
        let (u, v) = p.coprime_split().unwrap();
        assert_eq!(u, poly(&[-2, 1]));
        assert_eq!(v, poly(&[1, -2, 1]));
        assert_eq!(u.gcd(&v).degree(), 0);
    }

    #[test]
    fn squarefree_polynomials_do_not_split_this_way() {
        let p = poly(&[2, -3, 1]); // (t-1)(t-2), both multiplicity one
        assert!(p.coprime_split().is_none());
    }

    #[test]
    fn char_p_descent() {
        let f2 = FieldSpec::prime_field(2).unwrap();
        // t^4 + t^2 = (t^2 + t)^2 over F2; descends to t^2 + t = t(t+1),
        // which has the multiplicity structure of two distinct primes and
        // still no multiplicity-based split, but must not loop or panic.
        let p = Poly::new(
            f2,
            vec![f2.int(0), f2.int(0), f2.int(1), f2.int(0), f2.int(1)],
        );
        let _ = p.coprime_split();
    }

    #[test]
    fn root_probing() {
        let p = poly(&[6, -5, 1]); // (t-2)(t-3)
        let roots = p.roots_among(&q().eigenvalue_candidates());
        assert_eq!(roots.len(), 2);
    }
}
