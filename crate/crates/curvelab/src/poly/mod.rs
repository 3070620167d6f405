//! Sparse multivariate polynomials over an exact coefficient field, plus the
//! univariate, resultant, factorization, power-series, and double-point
//! normal-form layers built on top of them.
//!
//! Key items:
//! - [`Mono`] — exponent vector with graded-lexicographic order (earlier
//!   variables are greater, so with variables `[x, y, z]` we get `x > y > z`).
//! - [`MultiPoly`] — sparse polynomial keyed by monomial; the leading term is
//!   the graded-lex maximum.  Canonical text form: terms in descending order
//!   joined by ` + `/` - `, `*` between factors, `^1` and unit coefficients
//!   omitted, extension-field coefficients parenthesized.
//! - exact division, pseudo-remainders, and a primitive-PRS multivariate gcd,
//!   which are the engine room for resultants and reducedness checks.
//!
//! Submodules: [`unipoly`] (dense univariate), [`resultant`] (subresultant
//! PRS), [`factor`] (squarefree/distinct-degree/equal-degree splitting and
//! field embeddings), [`series`] (truncated power series), [`weierstrass`]
//! (double-point normal forms in characteristic 2).

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::field::{Coef, Field};

pub mod factor;
pub mod resultant;
pub mod series;
pub mod unipoly;
pub mod weierstrass;

use unipoly::UniPoly;

// ---------------------------------------------------------------------------
// Monomials
// ---------------------------------------------------------------------------

/// Exponent vector of a monomial; length always equals the ring's variable
/// count.  Ordered graded-lexicographically: total degree first, then the
/// exponent vector compared left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mono(pub Vec<u32>);

impl Mono {
    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn divides(&self, other: &Mono) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a <= b)
    }

    fn quotient(&self, by: &Mono) -> Mono {
        Mono(self.0.iter().zip(&by.0).map(|(&a, &b)| a - b).collect())
    }

    fn product(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(&a, &b)| a + b).collect())
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

// ---------------------------------------------------------------------------
// MultiPoly
// ---------------------------------------------------------------------------

/// A sparse multivariate polynomial.  Zero coefficients are never stored, so
/// structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    field: Field,
    vars: Vec<String>,
    terms: BTreeMap<Mono, Coef>,
}

impl MultiPoly {
    // -- construction -------------------------------------------------------

    pub fn zero(field: &Field, vars: &[&str]) -> MultiPoly {
        MultiPoly {
            field: field.clone(),
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: &Field, vars: &[&str], c: Coef) -> MultiPoly {
        let mut p = MultiPoly::zero(field, vars);
        if !field.is_zero(&c) {
            p.terms.insert(Mono(vec![0; p.vars.len()]), c);
        }
        p
    }

    pub fn one(field: &Field, vars: &[&str]) -> MultiPoly {
        let c = field.one();
        MultiPoly::constant(field, vars, c)
    }

    pub fn var(field: &Field, vars: &[&str], name: &str) -> Result<MultiPoly> {
        let idx = vars
            .iter()
            .position(|&v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let mut exps = vec![0u32; vars.len()];
        exps[idx] = 1;
        Ok(MultiPoly::from_terms(field, vars, vec![(exps, field.one())]))
    }

    /// Build from `(exponents, coefficient)` pairs; duplicates are summed and
    /// zeros dropped.
    pub fn from_terms(field: &Field, vars: &[&str], terms: Vec<(Vec<u32>, Coef)>) -> MultiPoly {
        let mut p = MultiPoly::zero(field, vars);
        for (exps, c) in terms {
            assert_eq!(exps.len(), p.vars.len(), "exponent vector length mismatch");
            p.add_term_inplace(Mono(exps), c);
        }
        p
    }

    fn add_term_inplace(&mut self, m: Mono, c: Coef) {
        if self.field.is_zero(&c) {
            return;
        }
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, c);
            }
            Some(old) => {
                let s = self.field.add(&old, &c);
                if !self.field.is_zero(&s) {
                    self.terms.insert(m, s);
                }
            }
        }
    }

    // -- basic queries ------------------------------------------------------

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn vars(&self) -> Vec<&str> {
        self.vars.iter().map(|s| s.as_str()).collect()
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|m| m.total_degree() == 0)
    }

    pub fn constant_value(&self) -> Option<Coef> {
        if self.is_zero() {
            return Some(self.field.zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Coef)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Graded-lex leading `(monomial, coefficient)`.
    pub fn leading(&self) -> Option<(&Mono, &Coef)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.leading().map(|(m, _)| m.total_degree())
    }

    /// Minimal total degree over all terms; the multiplicity at the origin.
    pub fn min_total_degree(&self) -> Option<u64> {
        self.terms.keys().next().map(|m| m.total_degree())
    }

    /// Highest exponent of one variable (0 if the variable never appears).
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    /// Least exponent of one variable over all terms (0 for the zero poly).
    pub fn ord_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).min().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.total_degree());
        match degs.next() {
            None => true,
            Some(d0) => degs.all(|d| d == d0),
        }
    }

    pub fn coef_of(&self, exps: &[u32]) -> Coef {
        self.terms
            .get(&Mono(exps.to_vec()))
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    fn assert_same_ring(&self, other: &MultiPoly) {
        assert!(
            self.field == other.field && self.vars == other.vars,
            "polynomial ring mismatch"
        );
    }

    // -- arithmetic ---------------------------------------------------------

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        self.assert_same_ring(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term_inplace(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> MultiPoly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = self.field.neg(c);
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        self.assert_same_ring(other);
        let mut out = MultiPoly::zero(&self.field, &self.vars_refs());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term_inplace(ma.product(mb), self.field.mul(ca, cb));
            }
        }
        out
    }

    pub fn mul_coef(&self, c: &Coef) -> MultiPoly {
        if self.field.is_zero(c) {
            return MultiPoly::zero(&self.field, &self.vars_refs());
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = self.field.mul(v, c);
        }
        out
    }

    /// Multiply by the monomial with the given exponent vector.
    pub fn mul_mono(&self, exps: &[u32]) -> MultiPoly {
        let m = Mono(exps.to_vec());
        let mut out = MultiPoly::zero(&self.field, &self.vars_refs());
        for (ma, ca) in &self.terms {
            out.terms.insert(ma.product(&m), ca.clone());
        }
        out
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one(&self.field, &self.vars_refs());
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

    fn vars_refs(&self) -> Vec<&str> {
        self.vars.iter().map(|s| s.as_str()).collect()
    }

    pub fn derivative(&self, var: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.field, &self.vars_refs());
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let factor = self.field.from_i64(e as i64);
            let nc = self.field.mul(c, &factor);
            if self.field.is_zero(&nc) {
                continue;
            }
            let mut nm = m.clone();
            nm.0[var] = e - 1;
            out.add_term_inplace(nm, nc);
        }
        out
    }

    // -- evaluation and substitution ---------------------------------------

    /// Full evaluation at a point (one coefficient per variable).
    pub fn eval(&self, point: &[Coef]) -> Coef {
        assert_eq!(point.len(), self.vars.len(), "evaluation point arity mismatch");
        let mut acc = self.field.zero();
        let mut pow_memo: Vec<HashMap<u32, Coef>> = vec![HashMap::new(); point.len()];
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pv = pow_memo[i]
                    .entry(e)
                    .or_insert_with(|| self.field.pow(&point[i], e as u64))
                    .clone();
                term = self.field.mul(&term, &pv);
            }
            acc = self.field.add(&acc, &term);
        }
        acc
    }

    /// Specialize one variable to a field constant.
    pub fn subst_coef(&self, var: usize, value: &Coef) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.field, &self.vars_refs());
        let mut pow_memo: HashMap<u32, Coef> = HashMap::new();
        for (m, c) in &self.terms {
            let e = m.0[var];
            let factor = pow_memo
                .entry(e)
                .or_insert_with(|| self.field.pow(value, e as u64))
                .clone();
            let nc = self.field.mul(c, &factor);
            let mut nm = m.clone();
            nm.0[var] = 0;
            out.add_term_inplace(nm, nc);
        }
        out
    }

    /// Simultaneous substitution of whole polynomials for variables.  Variables
    /// absent from the map are left alone.
    pub fn substitute(&self, map: &[(&str, MultiPoly)]) -> Result<MultiPoly> {
        let mut images: Vec<Option<MultiPoly>> = vec![None; self.vars.len()];
        for (name, img) in map {
            let idx = self.var_index(name)?;
            assert!(
                img.field == self.field && img.vars == self.vars,
                "substitution image must live in the same ring"
            );
            images[idx] = Some(img.clone());
        }
        let mut memo: HashMap<(usize, u32), MultiPoly> = HashMap::new();
        let mut out = MultiPoly::zero(&self.field, &self.vars_refs());
        for (m, c) in &self.terms {
            let mut term = MultiPoly::constant(&self.field, &self.vars_refs(), c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match &images[i] {
                    None => {
                        let mut exps = vec![0u32; self.vars.len()];
                        exps[i] = e;
                        term = term.mul_mono(&exps);
                    }
                    Some(img) => {
                        let p = memo
                            .entry((i, e))
                            .or_insert_with(|| img.pow(e))
                            .clone();
                        term = term.mul(&p);
                    }
                }
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Base change: rebuild over `target` mapping each coefficient.
    pub fn map_field(&self, target: &Field, f: impl Fn(&Coef) -> Coef) -> MultiPoly {
        let mut out = MultiPoly::zero(target, &self.vars_refs());
        for (m, c) in &self.terms {
            out.add_term_inplace(m.clone(), f(c));
        }
        out
    }

    // -- degree-structured views -------------------------------------------

    /// Dense coefficient list with respect to one variable: entry `i` is the
    /// coefficient of `var^i`, a polynomial not involving `var`.
    pub fn coeffs_wrt(&self, var: usize) -> Vec<MultiPoly> {
        let d = self.degree_in(var);
        let mut out = vec![MultiPoly::zero(&self.field, &self.vars_refs()); d as usize + 1];
        for (m, c) in &self.terms {
            let e = m.0[var] as usize;
            let mut nm = m.clone();
            nm.0[var] = 0;
            out[e].add_term_inplace(nm, c.clone());
        }
        if self.is_zero() {
            out.truncate(1);
        }
        out
    }

    /// Coefficient of the highest power of `var`.
    pub fn lead_coef_wrt(&self, var: usize) -> MultiPoly {
        let d = self.degree_in(var);
        let mut out = MultiPoly::zero(&self.field, &self.vars_refs());
        for (m, c) in &self.terms {
            if m.0[var] == d {
                let mut nm = m.clone();
                nm.0[var] = 0;
                out.add_term_inplace(nm, c.clone());
            }
        }
        out
    }

    /// Interpret as univariate in `var`; errors if any other variable occurs.
    pub fn as_univar(&self, var: usize) -> Result<UniPoly> {
        let mut coeffs = vec![self.field.zero(); self.degree_in(var) as usize + 1];
        for (m, c) in &self.terms {
            for (i, &e) in m.0.iter().enumerate() {
                if i != var && e > 0 {
                    return Err(Error::UnknownVariable(format!(
                        "variable `{}` blocks a univariate view",
                        self.vars[i]
                    )));
                }
            }
            coeffs[m.0[var] as usize] = c.clone();
        }
        Ok(UniPoly::from_coeffs(&self.field, coeffs))
    }

    /// Rebuild a multivariate polynomial from a univariate one.
    pub fn from_univar(u: &UniPoly, var: usize, field: &Field, vars: &[&str]) -> MultiPoly {
        let mut terms = Vec::new();
        for (i, c) in u.coeffs().iter().enumerate() {
            if field.is_zero(c) {
                continue;
            }
            let mut exps = vec![0u32; vars.len()];
            exps[var] = i as u32;
            terms.push((exps, c.clone()));
        }
        MultiPoly::from_terms(field, vars, terms)
    }

    /// Set one variable to 1 (pass to an affine chart).
    pub fn dehomogenize(&self, var: usize) -> MultiPoly {
        self.subst_coef(var, &self.field.one())
    }

    /// Pad every term with powers of `var` up to `target` total degree.
    pub fn homogenize(&self, var: usize, target: u64) -> Result<MultiPoly> {
        if self.degree_in(var) > 0 {
            return Err(Error::Parse(format!(
                "cannot homogenize with `{}`: it already occurs",
                self.vars[var]
            )));
        }
        let mut out = MultiPoly::zero(&self.field, &self.vars_refs());
        for (m, c) in &self.terms {
            let d = m.total_degree();
            if d > target {
                return Err(Error::DegreeTooSmall {
                    need: d as u32,
                    got: target as u32,
                });
            }
            let mut nm = m.clone();
            nm.0[var] = (target - d) as u32;
            out.add_term_inplace(nm, c.clone());
        }
        Ok(out)
    }

    /// Remove a variable from the variable list; errors if it occurs in any term.
    pub fn remove_var(&self, var: usize) -> Result<MultiPoly> {
        if self.degree_in(var) > 0 {
            return Err(Error::UnknownVariable(format!(
                "variable `{}` still occurs and cannot be removed",
                self.vars[var]
            )));
        }
        let vars: Vec<&str> = self
            .vars
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != var)
            .map(|(_, v)| v.as_str())
            .collect();
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let mut exps: Vec<u32> = m.0.clone();
            exps.remove(var);
            terms.push((exps, c.clone()));
        }
        Ok(MultiPoly::from_terms(&self.field, &vars, terms))
    }

    /// Append a fresh variable (exponent 0 in every term).
    pub fn extend_var(&self, name: &str) -> Result<MultiPoly> {
        if self.vars.iter().any(|v| v == name) {
            return Err(Error::Parse(format!("variable `{name}` already present")));
        }
        let mut vars: Vec<&str> = self.vars_refs();
        vars.push(name);
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let mut exps: Vec<u32> = m.0.clone();
            exps.push(0);
            terms.push((exps, c.clone()));
        }
        Ok(MultiPoly::from_terms(&self.field, &vars, terms))
    }

    /// Drop all terms whose exponent of `var` is at least `bound`.
    pub fn truncate_var(&self, var: usize, bound: u32) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.field, &self.vars_refs());
        for (m, c) in &self.terms {
            if m.0[var] < bound {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }

    /// Drop all terms of total degree at least `bound`.
    pub fn truncate_total(&self, bound: u64) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.field, &self.vars_refs());
        for (m, c) in &self.terms {
            if m.total_degree() < bound {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }

    /// Divide by `var^k`, which must divide every term.
    pub fn div_var_power(&self, var: usize, k: u32) -> Result<MultiPoly> {
        let mut out = MultiPoly::zero(&self.field, &self.vars_refs());
        for (m, c) in &self.terms {
            if m.0[var] < k {
                return Err(Error::InexactDivision);
            }
            let mut nm = m.clone();
            nm.0[var] -= k;
            out.terms.insert(nm, c.clone());
        }
        Ok(out)
    }

    // -- exact division, pseudo-remainder, gcd ------------------------------

    /// Exact polynomial division; errors unless `self = q * d` exactly.
    pub fn divide_exact(&self, d: &MultiPoly) -> Result<MultiPoly> {
        self.assert_same_ring(d);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (dm, dc) = {
            let (m, c) = d.leading().unwrap();
            (m.clone(), c.clone())
        };
        let dcinv = self.field.inv(&dc)?;
        let mut q = MultiPoly::zero(&self.field, &self.vars_refs());
        let mut r = self.clone();
        while !r.is_zero() {
            let (rm, rc) = {
                let (m, c) = r.leading().unwrap();
                (m.clone(), c.clone())
            };
            if !dm.divides(&rm) {
                return Err(Error::InexactDivision);
            }
            let qm = rm.quotient(&dm);
            let qc = self.field.mul(&rc, &dcinv);
            let mut qt = MultiPoly::zero(&self.field, &self.vars_refs());
            qt.terms.insert(qm.clone(), qc.clone());
            r = r.sub(&qt.mul(d));
            q.add_term_inplace(qm, qc);
        }
        Ok(q)
    }

    /// Pseudo-remainder with respect to `var`: the remainder of
    /// `lc(g)^(deg f - deg g + 1) * f` under division by `g`, computed without
    /// coefficient inversion.
    pub fn prem(&self, g: &MultiPoly, var: usize) -> MultiPoly {
        self.assert_same_ring(g);
        let dg = g.degree_in(var);
        let df = self.degree_in(var);
        assert!(!g.is_zero(), "pseudo-remainder by zero");
        if self.is_zero() || df < dg {
            // prem still scales by lc(g)^(df - dg + 1); with df < dg the
            // conventional exponent is taken as 0 and f is returned as is.
            return self.clone();
        }
        let lg = g.lead_coef_wrt(var);
        let delta = df - dg;
        let mut r = self.clone();
        let mut steps = 0u32;
        while !r.is_zero() && r.degree_in(var) >= dg {
            let dr = r.degree_in(var);
            let lr = r.lead_coef_wrt(var);
            let mut shift = vec![0u32; self.vars.len()];
            shift[var] = dr - dg;
            r = r.mul(&lg).sub(&g.mul(&lr).mul_mono(&shift));
            steps += 1;
        }
        // top up to the full lc(g)^(delta+1) scaling
        for _ in steps..=delta {
            r = r.mul(&lg);
        }
        r
    }

    /// Variables that actually occur in `self` or `other`.
    fn used_vars_with(&self, other: &MultiPoly) -> Vec<usize> {
        (0..self.vars.len())
            .filter(|&i| self.degree_in(i) > 0 || other.degree_in(i) > 0)
            .collect()
    }

    /// Content with respect to `var`: gcd of the `var`-coefficients.
    pub fn content_wrt(&self, var: usize) -> MultiPoly {
        let mut acc = MultiPoly::zero(&self.field, &self.vars_refs());
        for c in self.coeffs_wrt(var) {
            if c.is_zero() {
                continue;
            }
            acc = if acc.is_zero() { c } else { acc.gcd(&c) };
            if acc.is_constant() {
                break;
            }
        }
        if acc.is_zero() {
            acc
        } else {
            acc.normalize_monic()
        }
    }

    /// Scale so the graded-lex leading coefficient is 1.
    pub fn normalize_monic(&self) -> MultiPoly {
        match self.leading() {
            None => self.clone(),
            Some((_, lc)) => {
                let inv = self.field.inv(lc).expect("nonzero leading coefficient");
                self.mul_coef(&inv)
            }
        }
    }

    /// Greatest common divisor, normalized so its graded-lex leading
    /// coefficient is 1.  Univariate layers use fast monic Euclid; genuinely
    /// multivariate layers use the primitive pseudo-remainder sequence.
    pub fn gcd(&self, other: &MultiPoly) -> MultiPoly {
        self.assert_same_ring(other);
        let g = self.gcd_inner(other);
        if g.is_zero() {
            g
        } else {
            g.normalize_monic()
        }
    }

    fn gcd_inner(&self, other: &MultiPoly) -> MultiPoly {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let used = self.used_vars_with(other);
        if used.is_empty() {
            return MultiPoly::one(&self.field, &self.vars_refs());
        }
        if used.len() == 1 {
            let v = used[0];
            let a = self.as_univar(v).expect("single used variable");
            let b = other.as_univar(v).expect("single used variable");
            let g = a.gcd(&b);
            return MultiPoly::from_univar(&g, v, &self.field, &self.vars_refs());
        }
        // primitive PRS in the last used variable
        let v = *used.last().unwrap();
        let ca = self.content_wrt(v);
        let cb = other.content_wrt(v);
        let cg = ca.gcd_inner(&cb);
        let mut f = self.divide_exact(&ca).expect("content divides");
        let mut g = other.divide_exact(&cb).expect("content divides");
        if f.degree_in(v) < g.degree_in(v) {
            std::mem::swap(&mut f, &mut g);
        }
        loop {
            let r = f.prem(&g, v);
            if r.is_zero() {
                break;
            }
            if r.degree_in(v) == 0 {
                // primitive parts are coprime in v
                return cg;
            }
            let rc = r.content_wrt(v);
            let rp = r.divide_exact(&rc).expect("content divides");
            f = g;
            g = rp;
        }
        let gc = g.content_wrt(v);
        let gp = g.divide_exact(&gc).expect("content divides");
        cg.mul(&gp)
    }

    /// In characteristic `p`, the polynomial `h` with `h^p = self`; every
    /// exponent must be divisible by `p` (coefficient roots always exist in a
    /// finite field).
    pub fn pth_power_root(&self) -> Result<MultiPoly> {
        let p = self.field.characteristic();
        if p == 0 {
            return Err(Error::InexactDivision);
        }
        let mut out = MultiPoly::zero(&self.field, &self.vars_refs());
        for (m, c) in &self.terms {
            if m.0.iter().any(|&e| !(e as u64).is_multiple_of(p)) {
                return Err(Error::InexactDivision);
            }
            let nm = Mono(m.0.iter().map(|&e| e / p as u32).collect());
            out.terms.insert(nm, self.field.pth_root(c));
        }
        Ok(out)
    }
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

impl MultiPoly {
    fn mono_text(&self, m: &Mono) -> String {
        let mut parts = Vec::new();
        for (i, &e) in m.0.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.vars[i].clone()),
                _ => parts.push(format!("{}^{}", self.vars[i], e)),
            }
        }
        parts.join("*")
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            // split a rational coefficient into sign and magnitude
            let (negative, mag) = match c {
                Coef::Rat(r) if r.is_negative() => (true, Coef::Rat(-r.clone())),
                _ => (false, c.clone()),
            };
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let ctext = self.field.coef_text(&mag);
            let mtext = self.mono_text(m);
            if mtext.is_empty() {
                if ctext.contains('+') {
                    write!(f, "({ctext})")?;
                } else {
                    write!(f, "{ctext}")?;
                }
            } else if ctext == "1" {
                write!(f, "{mtext}")?;
            } else if ctext.contains('+') {
                write!(f, "({ctext})*{mtext}")?;
            } else {
                write!(f, "{ctext}*{mtext}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(u64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut it = s.chars().peekable();
    while let Some(&ch) = it.peek() {
        match ch {
            c if c.is_whitespace() => {
                it.next();
            }
            '+' => {
                it.next();
                out.push(Tok::Plus);
            }
            '-' => {
                it.next();
                out.push(Tok::Minus);
            }
            '*' => {
                it.next();
                out.push(Tok::Star);
            }
            '^' => {
                it.next();
                out.push(Tok::Caret);
            }
            '/' => {
                it.next();
                out.push(Tok::Slash);
            }
            '(' => {
                it.next();
                out.push(Tok::LParen);
            }
            ')' => {
                it.next();
                out.push(Tok::RParen);
            }
            c if c.is_ascii_digit() => {
                let mut n: u64 = 0;
                while let Some(&d) = it.peek() {
                    if let Some(v) = d.to_digit(10) {
                        n = n
                            .checked_mul(10)
                            .and_then(|x| x.checked_add(v as u64))
                            .ok_or_else(|| Error::Parse("integer literal overflow".into()))?;
                        it.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Num(n));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut name = String::new();
                while let Some(&d) = it.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        name.push(d);
                        it.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Ident(name));
            }
            other => {
                return Err(Error::Parse(format!("unexpected character `{other}`")));
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    field: &'a Field,
    vars: &'a [&'a str],
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut negate = false;
        if self.peek() == Some(&Tok::Minus) {
            self.next();
            negate = true;
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.next();
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some(Tok::Minus) => {
                    self.next();
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.next();
            let f = self.factor()?;
            acc = acc.mul(&f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly> {
        let base = self.base()?;
        if self.peek() == Some(&Tok::Caret) {
            self.next();
            match self.next() {
                Some(Tok::Num(e)) => {
                    let e32 = u32::try_from(e)
                        .map_err(|_| Error::Parse("exponent too large".into()))?;
                    Ok(base.pow(e32))
                }
                _ => Err(Error::Parse("expected an integer exponent after `^`".into())),
            }
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<MultiPoly> {
        match self.next() {
            Some(Tok::Num(n)) => {
                // allow `p/q` over the rationals
                if self.field.is_rational() && self.peek() == Some(&Tok::Slash) {
                    self.next();
                    match self.next() {
                        Some(Tok::Num(d)) => {
                            if d == 0 {
                                return Err(Error::DivisionByZero);
                            }
                            let num = self.field.from_i64(n as i64);
                            let den = self.field.from_i64(d as i64);
                            let c = self.field.div(&num, &den)?;
                            Ok(MultiPoly::constant(self.field, self.vars, c))
                        }
                        _ => Err(Error::Parse("expected a denominator after `/`".into())),
                    }
                } else {
                    let c = if self.field.is_rational() {
                        self.field.from_i64(n as i64)
                    } else {
                        // reduce mod p without requiring n < p
                        let p = self.field.characteristic();
                        self.field.from_i64((n % p) as i64)
                    };
                    Ok(MultiPoly::constant(self.field, self.vars, c))
                }
            }
            Some(Tok::Ident(name)) => {
                if let Ok(v) = MultiPoly::var(self.field, self.vars, &name) {
                    Ok(v)
                } else if name == "a"
                    && !self.field.is_rational()
                    && self.field.extension_degree() > 1
                {
                    Ok(MultiPoly::constant(
                        self.field,
                        self.vars,
                        self.field.generator(),
                    ))
                } else {
                    Err(Error::UnknownVariable(name))
                }
            }
            Some(Tok::Minus) => {
                let f = self.factor()?;
                Ok(f.neg())
            }
            Some(Tok::LParen) => {
                let e = self.expr()?;
                if self.next() != Some(Tok::RParen) {
                    return Err(Error::Parse("missing closing parenthesis".into()));
                }
                Ok(e)
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

impl MultiPoly {
    /// Parse the canonical text form (and reasonable variants of it).
    pub fn parse(field: &Field, vars: &[&str], s: &str) -> Result<MultiPoly> {
        let toks = tokenize(s)?;
        if toks.is_empty() {
            return Err(Error::Parse("empty polynomial text".into()));
        }
        let mut p = Parser { toks, pos: 0, field, vars };
        let out = p.expr()?;
        if p.pos != p.toks.len() {
            return Err(Error::Parse(format!(
                "trailing tokens at position {}",
                p.pos
            )));
        }
        Ok(out)
    }
}
