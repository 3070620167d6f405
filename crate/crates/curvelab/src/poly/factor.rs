//! Univariate factorization over finite fields, fully deterministic.
//!
//! Pipeline: squarefree decomposition (aware of p-th powers), distinct-degree
//! splitting with `gcd(f, x^(q^d) - x)`, then equal-degree splitting.  The
//! equal-degree step replaces the usual random choices with a deterministic
//! sweep through candidate polynomials in code order: in odd characteristic it
//! uses the half-power map `h^((q^d-1)/2) - 1`, in characteristic 2 the
//! absolute trace map `h + h^2 + ... + h^(2^(m-1))`.  Both send each
//! irreducible factor to a constant, so gcds split the input; some candidate
//! of degree below `deg f` always works, and small fields make the sweep
//! short in practice.
//!
//! Also here: [`Embedding`], the canonical inclusion `F_{p^a} -> F_{p^b}`
//! for `a | b`, sending the small field's generator to the least root (in
//! code order) of its modulus inside the big field.

use crate::error::{Error, Result};
use crate::field::{Coef, Field};
use crate::poly::unipoly::UniPoly;

/// Monic irreducible factors with multiplicities, sorted by degree and then
/// by coefficient codes, so the output order is reproducible.
pub fn factor(f: &UniPoly) -> Result<Vec<(UniPoly, u32)>> {
    let field = f.field().clone();
    if field.is_rational() {
        return Err(Error::Parse("factorization requires a finite field".into()));
    }
    if f.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let f = f.monic()?;
    if f.is_constant() {
        return Ok(Vec::new());
    }
    let mut out: Vec<(UniPoly, u32)> = Vec::new();
    for (sf, mult) in squarefree_decomposition(&f)? {
        for (prod, d) in distinct_degree_split(&sf)? {
            for irr in equal_degree_split(&prod, d)? {
                out.push((irr, mult));
            }
        }
    }
    out.sort_by(|(a, _), (b, _)| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| coeff_codes(a).cmp(&coeff_codes(b)))
    });
    Ok(out)
}

fn coeff_codes(p: &UniPoly) -> Vec<Coef> {
    p.coeffs().to_vec()
}

/// Write monic `f` as a product of pairwise-coprime squarefree parts:
/// returns `(g_i, i)` with `f = prod g_i^i` and each `g_i` squarefree.
pub fn squarefree_decomposition(f: &UniPoly) -> Result<Vec<(UniPoly, u32)>> {
    let field = f.field().clone();
    let p = field.characteristic();
    let mut out = Vec::new();
    if f.is_constant() {
        return Ok(out);
    }
    let df = f.derivative();
    let mut c = f.gcd(&df);
    let mut w = f.divrem(&c)?.0;
    let mut i = 1u32;
    while !w.is_constant() {
        let y = w.gcd(&c);
        let fac = w.divrem(&y)?.0;
        if !fac.is_constant() {
            out.push((fac, i));
        }
        w = y;
        c = c.divrem(&w)?.0;
        i += 1;
    }
    if !c.is_constant() {
        // all remaining factors have multiplicity divisible by p
        let root = c.pth_power_root()?;
        for (g, m) in squarefree_decomposition(&root)? {
            out.push((g, m * p as u32));
        }
    }
    Ok(out)
}

/// Split squarefree monic `f` into products of irreducibles of equal degree:
/// returns `(g, d)` with `g` the product of all degree-`d` factors.
pub fn distinct_degree_split(f: &UniPoly) -> Result<Vec<(UniPoly, usize)>> {
    let field = f.field().clone();
    let q = field.size().ok_or(Error::FieldMismatch)?;
    let mut out = Vec::new();
    let mut v = f.clone();
    let mut h = UniPoly::x(&field).rem(&v)?;
    let mut d = 0usize;
    while v.degree().unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        h = h.pow_mod(q, &v)?;
        let hx = h.sub(&UniPoly::x(&field));
        let g = v.gcd(&hx);
        if !g.is_constant() {
            out.push((g.clone(), d));
            v = v.divrem(&g)?.0;
            h = h.rem(&v)?;
        }
    }
    if !v.is_constant() {
        let dv = v.degree().unwrap();
        out.push((v, dv));
    }
    Ok(out)
}

/// Candidate polynomials in a fixed order: degrees 1, 2, ... with coefficient
/// codes counting up (skipping constants).
fn candidates(field: &Field, max_deg: usize) -> impl Iterator<Item = UniPoly> + '_ {
    let q = field.size().expect("finite field") as usize;
    (1..=max_deg).flat_map(move |d| {
        // q^d choices of lower coefficients x q-1 nonzero leads
        let lowers = (q as u64).pow(d as u32);
        (0..lowers).flat_map(move |low| {
            (1..q as u64).map(move |lead| {
                let mut coeffs = Vec::with_capacity(d + 1);
                let mut rem = low;
                for _ in 0..d {
                    coeffs.push(Coef::Fin((rem % q as u64) as u32));
                    rem /= q as u64;
                }
                coeffs.push(Coef::Fin(lead as u32));
                UniPoly::from_coeffs(field, coeffs)
            })
        })
    })
}

/// Split `f`, a product of `deg f / d` irreducibles all of degree `d`, into
/// those irreducibles.
pub fn equal_degree_split(f: &UniPoly, d: usize) -> Result<Vec<UniPoly>> {
    let deg = f.degree().unwrap_or(0);
    if deg == d {
        return Ok(vec![f.clone()]);
    }
    let field = f.field().clone();
    let q = field.size().ok_or(Error::FieldMismatch)?;
    let p = field.characteristic();
    let k = field.extension_degree();

    for h in candidates(&field, deg.saturating_sub(1).max(1)) {
        // a shared factor is already a split
        let shared = f.gcd(&h);
        if !shared.is_constant() && shared.degree() != f.degree() {
            return merge_splits(&shared, &f.divrem(&shared)?.0, d);
        }
        let splitter = if p == 2 {
            // absolute trace to F_2: h + h^2 + ... + h^(2^(m-1)) with 2^m = q^d
            let m = k as usize * d;
            let mut acc = h.rem(f)?;
            let mut cur = acc.clone();
            for _ in 1..m {
                cur = cur.mul(&cur).rem(f)?;
                acc = acc.add(&cur);
            }
            acc
        } else {
            // half-power map: h^((q^d-1)/2) - 1
            let mut e: u64 = 1;
            let mut overflow = false;
            for _ in 0..d {
                match e.checked_mul(q) {
                    Some(v) => e = v,
                    None => {
                        overflow = true;
                        break;
                    }
                }
            }
            if overflow {
                return Err(Error::FieldTooLarge { p, k: k * d as u32, bound: u64::MAX });
            }
            let half = (e - 1) / 2;
            let pw = h.pow_mod(half, f)?;
            pw.sub(&UniPoly::one(&field))
        };
        let g = f.gcd(&splitter);
        if !g.is_constant() && g.degree() != f.degree() {
            return merge_splits(&g, &f.divrem(&g)?.0, d);
        }
    }
    unreachable!("some candidate below deg f always splits a reducible input")
}

fn merge_splits(a: &UniPoly, b: &UniPoly, d: usize) -> Result<Vec<UniPoly>> {
    let mut out = equal_degree_split(&a.monic()?, d)?;
    out.extend(equal_degree_split(&b.monic()?, d)?);
    Ok(out)
}

/// Roots of `f` inside its own coefficient field, with multiplicities, sorted
/// by element code.
pub fn roots_in_field(f: &UniPoly) -> Result<Vec<(Coef, u32)>> {
    let mut out = Vec::new();
    for (irr, mult) in factor(f)? {
        if irr.degree() == Some(1) {
            let c0 = irr.get(0);
            let root = f.field().neg(&c0);
            out.push((root, mult));
        }
    }
    out.sort();
    Ok(out)
}

/// Is `f` irreducible (over its finite coefficient field)?
pub fn is_irreducible(f: &UniPoly) -> Result<bool> {
    if f.degree().unwrap_or(0) == 0 {
        return Ok(false);
    }
    let fs = factor(f)?;
    Ok(fs.len() == 1 && fs[0].1 == 1 && fs[0].0.degree() == f.degree())
}

// ---------------------------------------------------------------------------
// Embeddings between finite fields of the same characteristic
// ---------------------------------------------------------------------------

/// The canonical inclusion `F_{p^a} -> F_{p^b}` for `a | b`: the generator of
/// the small field goes to the least root (in code order) of the small
/// modulus inside the big field.  Prime-field constants keep their codes.
pub struct Embedding {
    from: Field,
    to: Field,
    gen_image: Coef,
}

impl Embedding {
    pub fn new(from: &Field, to: &Field) -> Result<Embedding> {
        if from.is_rational() || to.is_rational() {
            return Err(Error::FieldMismatch);
        }
        if from.characteristic() != to.characteristic() {
            return Err(Error::FieldMismatch);
        }
        let a = from.extension_degree();
        let b = to.extension_degree();
        if !b.is_multiple_of(a) {
            return Err(Error::NoEmbedding { from_k: a, to_k: b });
        }
        // the small modulus has prime-field coefficients, whose codes are
        // valid verbatim in the big field
        let coeffs: Vec<Coef> = from
            .modulus()
            .unwrap()
            .iter()
            .map(|&c| Coef::Fin(c as u32))
            .collect();
        let modulus_in_to = UniPoly::from_coeffs(to, coeffs);
        let roots = roots_in_field(&modulus_in_to)?;
        let gen_image = roots
            .first()
            .map(|(r, _)| r.clone())
            .ok_or(Error::NoEmbedding { from_k: a, to_k: b })?;
        Ok(Embedding { from: from.clone(), to: to.clone(), gen_image })
    }

    /// Identity embedding of a field into itself.
    pub fn identity(field: &Field) -> Embedding {
        Embedding {
            from: field.clone(),
            to: field.clone(),
            gen_image: if field.extension_degree() > 1 {
                field.generator()
            } else {
                field.zero()
            },
        }
    }

    pub fn from_field(&self) -> &Field {
        &self.from
    }

    pub fn to_field(&self) -> &Field {
        &self.to
    }

    pub fn apply(&self, c: &Coef) -> Coef {
        let code = match c {
            Coef::Fin(v) => *v as u64,
            Coef::Rat(_) => panic!("embedding applied to a rational"),
        };
        let p = self.from.characteristic();
        let mut acc = self.to.zero();
        let mut power = self.to.one();
        let mut rem = code;
        while rem > 0 {
            let digit = (rem % p) as i64;
            rem /= p;
            if digit != 0 {
                let term = self.to.mul(&self.to.from_i64(digit), &power);
                acc = self.to.add(&acc, &term);
            }
            power = self.to.mul(&power, &self.gen_image);
        }
        acc
    }

    /// Map a whole polynomial coefficientwise.
    pub fn apply_poly(&self, f: &UniPoly) -> UniPoly {
        let coeffs = f.coeffs().iter().map(|c| self.apply(c)).collect();
        UniPoly::from_coeffs(&self.to, coeffs)
    }
}
