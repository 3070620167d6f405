//! Truncated power series in one variable with explicit precision tracking.
//!
//! A [`PowerSeries`] stores coefficients of `u^0 .. u^(prec-1)` and represents
//! an element known modulo `u^prec`.  Every operation computes the best
//! provable precision of its result: a product of series known modulo
//! `u^pa`/`u^pb` with valuations `va`/`vb` is known modulo
//! `u^min(pa+vb, pb+va)`.  Exact polynomials can be injected at any precision
//! because their tails are genuinely zero.
//!
//! These series carry branch parametrizations of curve germs; the inversion
//! of unit series is what turns projective parametrizations into local
//! coordinates.

use crate::error::{Error, Result};
use crate::field::{Coef, Field};
use crate::poly::unipoly::UniPoly;
use crate::poly::MultiPoly;
use std::collections::HashMap;

#[derive(Clone, PartialEq, Eq)]
pub struct PowerSeries {
    field: Field,
    coeffs: Vec<Coef>, // coeffs[i] is the u^i coefficient; len == prec
}

impl std::fmt::Debug for PowerSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let texts: Vec<String> =
            self.coeffs.iter().map(|c| self.field.coef_text(c)).collect();
        write!(f, "Series[{}; O(u^{})]", texts.join(", "), self.coeffs.len())
    }
}

impl PowerSeries {
    pub fn zero(field: &Field, prec: usize) -> PowerSeries {
        PowerSeries { field: field.clone(), coeffs: vec![field.zero(); prec] }
    }

    pub fn one(field: &Field, prec: usize) -> PowerSeries {
        let mut s = PowerSeries::zero(field, prec);
        if prec > 0 {
            s.coeffs[0] = field.one();
        }
        s
    }

    /// The monomial `u^k`.
    pub fn monomial(field: &Field, k: usize, prec: usize) -> PowerSeries {
        let mut s = PowerSeries::zero(field, prec);
        if k < prec {
            s.coeffs[k] = field.one();
        }
        s
    }

    pub fn from_coeffs(field: &Field, coeffs: Vec<Coef>) -> PowerSeries {
        PowerSeries { field: field.clone(), coeffs }
    }

    /// Inject an exact univariate polynomial at the requested precision.
    pub fn from_univar(p: &UniPoly, prec: usize) -> PowerSeries {
        let field = p.field().clone();
        let mut coeffs = vec![field.zero(); prec];
        for (i, c) in p.coeffs().iter().enumerate() {
            if i < prec {
                coeffs[i] = c.clone();
            }
        }
        PowerSeries { field, coeffs }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn prec(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: usize) -> Coef {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Index of the first nonzero coefficient, if any below the precision.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !self.field.is_zero(c))
    }

    /// Valuation for error bookkeeping: truly-zero-so-far series count as
    /// having valuation at least `prec`.
    fn val_floor(&self) -> usize {
        self.valuation().unwrap_or(self.prec())
    }

    pub fn is_zero_mod_prec(&self) -> bool {
        self.valuation().is_none()
    }

    pub fn truncate(&self, prec: usize) -> PowerSeries {
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(prec);
        PowerSeries { field: self.field.clone(), coeffs }
    }

    pub fn add(&self, other: &PowerSeries) -> PowerSeries {
        let prec = self.prec().min(other.prec());
        let mut coeffs = Vec::with_capacity(prec);
        for i in 0..prec {
            coeffs.push(self.field.add(&self.coeffs[i], &other.coeffs[i]));
        }
        PowerSeries { field: self.field.clone(), coeffs }
    }

    pub fn neg(&self) -> PowerSeries {
        PowerSeries {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| self.field.neg(c)).collect(),
        }
    }

    pub fn sub(&self, other: &PowerSeries) -> PowerSeries {
        self.add(&other.neg())
    }

    pub fn mul_coef(&self, c: &Coef) -> PowerSeries {
        PowerSeries {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|v| self.field.mul(v, c)).collect(),
        }
    }

    /// Multiply by `u^k`, gaining `k` digits of precision.
    pub fn shift(&self, k: usize) -> PowerSeries {
        let mut coeffs = vec![self.field.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        PowerSeries { field: self.field.clone(), coeffs }
    }

    pub fn mul(&self, other: &PowerSeries) -> PowerSeries {
        let prec = (self.prec() + other.val_floor()).min(other.prec() + self.val_floor());
        let mut coeffs = vec![self.field.zero(); prec];
        for (i, a) in self.coeffs.iter().enumerate() {
            if self.field.is_zero(a) || i >= prec {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= prec {
                    break;
                }
                if self.field.is_zero(b) {
                    continue;
                }
                let prod = self.field.mul(a, b);
                coeffs[i + j] = self.field.add(&coeffs[i + j], &prod);
            }
        }
        PowerSeries { field: self.field.clone(), coeffs }
    }

    /// Inverse of a unit series (valuation 0), to the same precision.
    pub fn invert(&self) -> Result<PowerSeries> {
        if self.prec() == 0 || self.field.is_zero(&self.coeffs[0]) {
            return Err(Error::NotAUnit);
        }
        let a0inv = self.field.inv(&self.coeffs[0])?;
        let prec = self.prec();
        let mut out = vec![self.field.zero(); prec];
        out[0] = a0inv.clone();
        for n in 1..prec {
            // b_n = -a0^{-1} * sum_{i=1..n} a_i b_{n-i}
            let mut acc = self.field.zero();
            for i in 1..=n {
                let ai = &self.coeffs[i];
                if self.field.is_zero(ai) {
                    continue;
                }
                let prod = self.field.mul(ai, &out[n - i]);
                acc = self.field.add(&acc, &prod);
            }
            out[n] = self.field.neg(&self.field.mul(&a0inv, &acc));
        }
        Ok(PowerSeries { field: self.field.clone(), coeffs: out })
    }

    pub fn pow(&self, e: u32) -> PowerSeries {
        let prec = self.prec();
        let mut acc = PowerSeries::one(&self.field, prec);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

/// Evaluate a bivariate polynomial at a pair of series.  The polynomial's
/// variables map positionally: index 0 to `s0`, index 1 to `s1`.  Variables
/// beyond the second must not occur.
pub fn eval_poly2(f: &MultiPoly, s0: &PowerSeries, s1: &PowerSeries) -> Result<PowerSeries> {
    let field = f.field().clone();
    for (m, _) in f.terms() {
        for (i, &e) in m.0.iter().enumerate() {
            if i >= 2 && e > 0 {
                return Err(Error::UnknownVariable(f.vars()[i].to_string()));
            }
        }
    }
    let prec = s0.prec().min(s1.prec());
    let mut memo0: HashMap<u32, PowerSeries> = HashMap::new();
    let mut memo1: HashMap<u32, PowerSeries> = HashMap::new();
    let mut acc = PowerSeries::zero(&field, prec);
    for (m, c) in f.terms() {
        let e0 = m.0[0];
        let e1 = if m.0.len() > 1 { m.0[1] } else { 0 };
        let mut term = PowerSeries::one(&field, prec);
        if e0 > 0 {
            let p0 = memo0.entry(e0).or_insert_with(|| s0.pow(e0)).clone();
            term = term.mul(&p0);
        }
        if e1 > 0 {
            let p1 = memo1.entry(e1).or_insert_with(|| s1.pow(e1)).clone();
            term = term.mul(&p1);
        }
        acc = acc.add(&term.mul_coef(c));
    }
    Ok(acc)
}
