//! Dense univariate polynomials over an exact field.
//!
//! This is the workhorse for Euclidean division, gcds, modular powering, and
//! the factorization machinery.  Coefficients are stored low degree first with
//! no trailing zeros, so the zero polynomial has an empty coefficient list.

use crate::error::{Error, Result};
use crate::field::{Coef, Field};

#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    field: Field,
    coeffs: Vec<Coef>,
}

impl std::fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let texts: Vec<String> = self.coeffs.iter().map(|c| self.field.coef_text(c)).collect();
        write!(f, "UniPoly[{}]", texts.join(", "))
    }
}

impl UniPoly {
    pub fn zero(field: &Field) -> UniPoly {
        UniPoly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &Field) -> UniPoly {
        UniPoly::constant(field, field.one())
    }

    pub fn constant(field: &Field, c: Coef) -> UniPoly {
        let mut p = UniPoly::zero(field);
        if !field.is_zero(&c) {
            p.coeffs.push(c);
        }
        p
    }

    /// The monomial `x`.
    pub fn x(field: &Field) -> UniPoly {
        UniPoly::from_coeffs(field, vec![field.zero(), field.one()])
    }

    pub fn from_coeffs(field: &Field, coeffs: Vec<Coef>) -> UniPoly {
        let mut p = UniPoly { field: field.clone(), coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self
            .coeffs
            .last()
            .map(|c| self.field.is_zero(c))
            .unwrap_or(false)
        {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Coef] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn get(&self, i: usize) -> Coef {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn lc(&self) -> Option<&Coef> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.field.add(&self.get(i), &other.get(i)));
        }
        UniPoly::from_coeffs(&self.field, out)
    }

    pub fn neg(&self) -> UniPoly {
        let out = self.coeffs.iter().map(|c| self.field.neg(c)).collect();
        UniPoly::from_coeffs(&self.field, out)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero(&self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if self.field.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let prod = self.field.mul(a, b);
                out[i + j] = self.field.add(&out[i + j], &prod);
            }
        }
        UniPoly::from_coeffs(&self.field, out)
    }

    pub fn mul_coef(&self, c: &Coef) -> UniPoly {
        let out = self.coeffs.iter().map(|v| self.field.mul(v, c)).collect();
        UniPoly::from_coeffs(&self.field, out)
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut out = vec![self.field.zero(); k];
        out.extend(self.coeffs.iter().cloned());
        UniPoly::from_coeffs(&self.field, out)
    }

    /// Quotient and remainder; the divisor must be nonzero.
    pub fn divrem(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lcinv = self.field.inv(d.lc().unwrap())?;
        let mut r = self.coeffs.clone();
        let mut q = vec![self.field.zero(); self.coeffs.len().saturating_sub(dd)];
        while r.len() > dd {
            let lead = r.last().unwrap().clone();
            let pos = r.len() - 1 - dd;
            if !self.field.is_zero(&lead) {
                let qc = self.field.mul(&lead, &lcinv);
                for (i, dc) in d.coeffs.iter().enumerate() {
                    let sub = self.field.mul(&qc, dc);
                    r[pos + i] = self.field.sub(&r[pos + i], &sub);
                }
                q[pos] = qc;
            }
            r.pop();
        }
        Ok((
            UniPoly::from_coeffs(&self.field, q),
            UniPoly::from_coeffs(&self.field, r),
        ))
    }

    pub fn rem(&self, d: &UniPoly) -> Result<UniPoly> {
        Ok(self.divrem(d)?.1)
    }

    /// Monic scalar multiple (errors on the zero polynomial).
    pub fn monic(&self) -> Result<UniPoly> {
        let lc = self.lc().ok_or(Error::DivisionByZero)?;
        let inv = self.field.inv(lc)?;
        Ok(self.mul_coef(&inv))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor in gcd loop");
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic().expect("nonzero")
        }
    }

    pub fn eval(&self, x: &Coef) -> Coef {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = self.field.mul(&acc, x);
            acc = self.field.add(&acc, c);
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero(&self.field);
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| self.field.mul(c, &self.field.from_i64(i as i64)))
            .collect();
        UniPoly::from_coeffs(&self.field, out)
    }

    /// `self^e mod m` by binary powering.
    pub fn pow_mod(&self, e: u64, m: &UniPoly) -> Result<UniPoly> {
        let mut base = self.rem(m)?;
        let mut acc = UniPoly::one(&self.field).rem(m)?;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m)?;
            }
            base = base.mul(&base).rem(m)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// In characteristic `p`, the polynomial `h` with `h(x)^p = self(x)`;
    /// requires every exponent with a nonzero coefficient to be a multiple of
    /// `p`.
    pub fn pth_power_root(&self) -> Result<UniPoly> {
        let p = self.field.characteristic();
        if p == 0 {
            return Err(Error::InexactDivision);
        }
        let mut out = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if (i as u64).is_multiple_of(p) {
                out.push(self.field.pth_root(c));
            } else if !self.field.is_zero(c) {
                return Err(Error::InexactDivision);
            }
        }
        Ok(UniPoly::from_coeffs(&self.field, out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    #[test]
    fn divrem_reconstructs() {
        let f = Field::finite(7, 1).unwrap();
        let a = UniPoly::from_coeffs(
            &f,
            vec![f.from_i64(3), f.from_i64(1), f.from_i64(4), f.from_i64(1), f.from_i64(5)],
        );
        let b = UniPoly::from_coeffs(&f, vec![f.from_i64(2), f.from_i64(0), f.from_i64(3)]);
        let (q, r) = a.divrem(&b).unwrap();
        let back = q.mul(&b).add(&r);
        assert_eq!(back, a);
        assert!(r.degree().unwrap_or(0) < b.degree().unwrap());
    }

    #[test]
    fn gcd_of_products() {
        let f = Field::finite(5, 1).unwrap();
        let g = UniPoly::from_coeffs(&f, vec![f.from_i64(1), f.from_i64(1)]); // x + 1
        let a = g.mul(&UniPoly::from_coeffs(&f, vec![f.from_i64(2), f.from_i64(0), f.from_i64(1)]));
        let b = g.mul(&UniPoly::from_coeffs(&f, vec![f.from_i64(3), f.from_i64(1)]));
        let d = a.gcd(&b);
        assert_eq!(d, g.monic().unwrap());
    }

    #[test]
    fn pow_mod_fermat() {
        // x^q = x mod (x^q - x) ... check x^5 mod (x^2+1) over F_5 by hand:
        // x^2 = -1, so x^4 = 1, x^5 = x.
        let f = Field::finite(5, 1).unwrap();
        let x = UniPoly::x(&f);
        let m = UniPoly::from_coeffs(&f, vec![f.from_i64(1), f.from_i64(0), f.from_i64(1)]);
        let r = x.pow_mod(5, &m).unwrap();
        assert_eq!(r, x);
    }

    #[test]
    fn pth_power_root_univariate() {
        let f = Field::finite(2, 2).unwrap();
        let a = f.generator();
        // h = a*x + 1; h^2 = a^2 x^2 + 1 (char 2)
        let h = UniPoly::from_coeffs(&f, vec![f.one(), a.clone()]);
        let h2 = h.mul(&h);
        assert_eq!(h2.pth_power_root().unwrap(), h);
    }
}
