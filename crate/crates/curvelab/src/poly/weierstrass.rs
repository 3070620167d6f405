//! Normal forms for double-point germs `f(x, z)` with `f(0, z) = z^2 * unit`.
//!
//! Two stages:
//! 1. **Preparation**: factor `f = U * (z^2 + a(x) z + b(x))` with `U` a unit
//!    and `a, b` series vanishing at 0.  Since `f` is a polynomial of small
//!    `z`-degree, the quadratic factor is found by Newton iteration on the
//!    pair `(a, b)`: divide `f` by the candidate `z^2 + a z + b` as a
//!    `z`-polynomial and drive the linear remainder to zero, doubling the
//!    `x`-precision each round.  The final division is re-checked, so a
//!    returned form is certified to the stated precision.
//! 2. **Reduction** (characteristic 2): repeatedly absorb the leading term of
//!    `b` by substitutions `z -> z + c x^s`, which send `b` to
//!    `b + c^2 x^(2s) + a c x^s`.  The loop ends in one of the stable shapes:
//!    `ord b` odd and below `2 ord a` (a cusp-type double point, with
//!    `m = ord b - 1`), or an unsolvable trace obstruction at
//!    `ord b = 2 ord a` (two conjugate branches).  In characteristic not 2
//!    the square is completed instead and `ord(b - a^2/4)` is reported.
//!
//! All series run at a caller-chosen precision `window`; every reported order
//! is certified below that window, and `None` means "zero to the window".

use crate::error::{Error, Result};
use crate::field::{Coef, Field};
use crate::poly::series::PowerSeries;
use crate::poly::MultiPoly;

/// The prepared quadratic factor `z^2 + a z + b`, with coefficient series in
/// `x` valid modulo `x^window`.
pub struct QuadraticFactor {
    pub a: PowerSeries,
    pub b: PowerSeries,
    pub window: usize,
}

/// Orders reported by the reduction stage, all relative to `window`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoublePointForm {
    /// `ord a` (characteristic 2 only); `None` when `a = 0` to the window.
    pub ord_a: Option<usize>,
    /// Order of the fully reduced `b`; `None` when it vanished to the window.
    pub ord_b: Option<usize>,
    /// Whether the reduction stopped at the two-conjugate-branch obstruction
    /// `ord b = 2 ord a` with no splitting root in the field.
    pub trace_obstruction: bool,
    pub window: usize,
}

// -- fixed-length series helpers (computations mod x^len) -------------------

fn smul(field: &Field, a: &[Coef], b: &[Coef], len: usize) -> Vec<Coef> {
    let mut out = vec![field.zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if field.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if i + j >= len {
                break;
            }
            if field.is_zero(y) {
                continue;
            }
            let p = field.mul(x, y);
            out[i + j] = field.add(&out[i + j], &p);
        }
    }
    out
}

fn sadd(field: &Field, a: &[Coef], b: &[Coef], len: usize) -> Vec<Coef> {
    (0..len)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(|| field.zero());
            let y = b.get(i).cloned().unwrap_or_else(|| field.zero());
            field.add(&x, &y)
        })
        .collect()
}

fn ssub(field: &Field, a: &[Coef], b: &[Coef], len: usize) -> Vec<Coef> {
    (0..len)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(|| field.zero());
            let y = b.get(i).cloned().unwrap_or_else(|| field.zero());
            field.sub(&x, &y)
        })
        .collect()
}

fn sinv(field: &Field, a: &[Coef], len: usize) -> Result<Vec<Coef>> {
    if a.is_empty() || field.is_zero(&a[0]) {
        return Err(Error::NotAUnit);
    }
    let a0inv = field.inv(&a[0])?;
    let mut out = vec![field.zero(); len];
    out[0] = a0inv.clone();
    for n in 1..len {
        let mut acc = field.zero();
        for i in 1..=n {
            let ai = a.get(i).cloned().unwrap_or_else(|| field.zero());
            if field.is_zero(&ai) {
                continue;
            }
            let p = field.mul(&ai, &out[n - i]);
            acc = field.add(&acc, &p);
        }
        out[n] = field.neg(&field.mul(&a0inv, &acc));
    }
    Ok(out)
}

fn sis_zero(field: &Field, a: &[Coef]) -> bool {
    a.iter().all(|c| field.is_zero(c))
}

/// Divide the `z`-coefficient list `cz` (index = `z`-power) by
/// `z^2 + a z + b`, all coefficient series mod `x^len`.  Returns the quotient
/// list and the remainder pair `(r1, r0)`.
#[allow(clippy::type_complexity)]
fn divide_by_quadratic(
    field: &Field,
    cz: &[Vec<Coef>],
    a: &[Coef],
    b: &[Coef],
    len: usize,
) -> (Vec<Vec<Coef>>, Vec<Coef>, Vec<Coef>) {
    let d = cz.len() - 1;
    let mut c: Vec<Vec<Coef>> = cz
        .iter()
        .map(|s| {
            let mut v = s.clone();
            v.resize(len, field.zero());
            v.truncate(len);
            v
        })
        .collect();
    let mut q: Vec<Vec<Coef>> = vec![vec![field.zero(); len]; d.saturating_sub(1)];
    for j in (2..=d).rev() {
        let qc = c[j].clone();
        q[j - 2] = qc.clone();
        let asub = smul(field, a, &qc, len);
        c[j - 1] = ssub(field, &c[j - 1], &asub, len);
        let bsub = smul(field, b, &qc, len);
        c[j - 2] = ssub(field, &c[j - 2], &bsub, len);
    }
    let r1 = c.get(1).cloned().unwrap_or_else(|| vec![field.zero(); len]);
    let r0 = c[0].clone();
    (q, r1, r0)
}

/// Reduce a `z`-coefficient list modulo `z^2 + a z + b`, returning `(c1, c0)`.
fn reduce_mod_quadratic(
    field: &Field,
    list: &[Vec<Coef>],
    a: &[Coef],
    b: &[Coef],
    len: usize,
) -> (Vec<Coef>, Vec<Coef>) {
    let (_, r1, r0) = divide_by_quadratic(field, list, a, b, len);
    (r1, r0)
}

/// Weierstrass preparation of a double-point germ: find the quadratic factor
/// `z^2 + a(x) z + b(x)` of `f` modulo `x^window`.  Requires `f(0, z)` to have
/// `z`-order exactly 2.
pub fn weierstrass_form(
    f: &MultiPoly,
    x: usize,
    z: usize,
    window: usize,
) -> Result<QuadraticFactor> {
    let field = f.field().clone();
    // every variable other than x, z must be absent
    for (m, _) in f.terms() {
        for (i, &e) in m.0.iter().enumerate() {
            if i != x && i != z && e > 0 {
                return Err(Error::UnknownVariable(f.vars()[i].to_string()));
            }
        }
    }
    if f.is_zero() {
        return Err(Error::NotZRegular);
    }
    let d = f.degree_in(z) as usize;
    // z-coefficient series of f (exact polynomials in x)
    let mut cz: Vec<Vec<Coef>> = vec![vec![field.zero(); window]; d + 1];
    for (m, c) in f.terms() {
        let ez = m.0[z] as usize;
        let ex = m.0[x] as usize;
        if ex < window {
            cz[ez][ex] = field.add(&cz[ez][ex], c);
        }
    }
    // z-regularity of order 2: f(0, z) = z^2 * unit
    if d < 2
        || !field.is_zero(&cz[0][0])
        || !field.is_zero(&cz[1][0])
        || field.is_zero(&cz[2][0])
    {
        return Err(Error::NotZRegular);
    }

    let mut a = vec![field.zero(); window];
    let mut b = vec![field.zero(); window];
    let mut cur = 1usize;
    while cur < window {
        cur = (cur * 2).min(window);
        let (q, r1, r0) = divide_by_quadratic(&field, &cz, &a, &b, cur);
        if sis_zero(&field, &r1) && sis_zero(&field, &r0) {
            continue;
        }
        // rows of the Newton system: Q*z mod G and Q mod G
        let mut qz: Vec<Vec<Coef>> = vec![vec![field.zero(); cur]];
        qz.extend(q.iter().cloned());
        let (al1, al0) = reduce_mod_quadratic(&field, &qz, &a, &b, cur);
        let (be1, be0) = reduce_mod_quadratic(&field, &q, &a, &b, cur);
        // solve [al1 be1; al0 be0] [da; db] = [r1; r0]
        let det = ssub(
            &field,
            &smul(&field, &al1, &be0, cur),
            &smul(&field, &be1, &al0, cur),
            cur,
        );
        let detinv = sinv(&field, &det, cur)?;
        let da_num = ssub(
            &field,
            &smul(&field, &r1, &be0, cur),
            &smul(&field, &be1, &r0, cur),
            cur,
        );
        let db_num = ssub(
            &field,
            &smul(&field, &al1, &r0, cur),
            &smul(&field, &r1, &al0, cur),
            cur,
        );
        let da = smul(&field, &da_num, &detinv, cur);
        let db = smul(&field, &db_num, &detinv, cur);
        a = sadd(&field, &a, &da, cur);
        b = sadd(&field, &b, &db, cur);
        a.resize(window, field.zero());
        b.resize(window, field.zero());
    }

    // certify: the division must now be exact to the full window
    let (_, r1, r0) = divide_by_quadratic(&field, &cz, &a, &b, window);
    if !sis_zero(&field, &r1) || !sis_zero(&field, &r0) {
        return Err(Error::InsufficientPrecision { needed: window * 2, have: window });
    }
    Ok(QuadraticFactor {
        a: PowerSeries::from_coeffs(&field, a),
        b: PowerSeries::from_coeffs(&field, b),
        window,
    })
}

/// Solve `v^2 + A v + M = 0` by sweeping the field in code order.
fn solve_quadratic_element(field: &Field, a: &Coef, m: &Coef) -> Option<Coef> {
    for v in field.enumerate() {
        let lhs = field.add(&field.add(&field.mul(&v, &v), &field.mul(a, &v)), m);
        if field.is_zero(&lhs) {
            return Some(v);
        }
    }
    None
}

/// Characteristic-2 reduction of `z^2 + a z + b`; see the module notes.
pub fn reduce_char2(qf: &QuadraticFactor) -> Result<DoublePointForm> {
    let field = qf.a.field().clone();
    if field.characteristic() != 2 {
        return Err(Error::FieldMismatch);
    }
    let window = qf.window;
    let a = qf.a.clone();
    let ord_a = a.valuation();
    let mut b = qf.b.clone();
    loop {
        let t = match b.valuation() {
            None => {
                return Ok(DoublePointForm {
                    ord_a,
                    ord_b: None,
                    trace_obstruction: false,
                    window,
                });
            }
            Some(t) => t,
        };
        let stable = match ord_a {
            None => t % 2 == 1,
            Some(alpha) => t % 2 == 1 && t < 2 * alpha,
        };
        if stable {
            return Ok(DoublePointForm {
                ord_a,
                ord_b: Some(t),
                trace_obstruction: false,
                window,
            });
        }
        let mu = b.coeff(t);
        // pick the substitution z -> z + c x^s that kills the leading term
        let c_term: Option<(Coef, usize)> = match ord_a {
            None => {
                // t even (else stable): c = sqrt(mu) x^(t/2)
                Some((field.pth_root(&mu), t / 2))
            }
            Some(alpha) => {
                if t % 2 == 0 && t < 2 * alpha {
                    Some((field.pth_root(&mu), t / 2))
                } else if t > 2 * alpha {
                    // c = (mu / a_alpha) x^(t - alpha)
                    let aa = a.coeff(alpha);
                    Some((field.div(&mu, &aa)?, t - alpha))
                } else {
                    // t == 2 alpha: solve v^2 + a_alpha v + mu = 0
                    let aa = a.coeff(alpha);
                    match solve_quadratic_element(&field, &aa, &mu) {
                        Some(v) => Some((v, alpha)),
                        None => {
                            return Ok(DoublePointForm {
                                ord_a,
                                ord_b: Some(t),
                                trace_obstruction: true,
                                window,
                            });
                        }
                    }
                }
            }
        };
        let (c, s) = c_term.unwrap();
        // b <- b + c^2 x^(2s) + a c x^s
        let c2 = field.mul(&c, &c);
        let sq = PowerSeries::monomial(&field, 2 * s, window).mul_coef(&c2);
        let cross = a.shift(s).truncate(window).mul_coef(&c);
        let nb = b.add(&sq).add(&cross);
        // the leading term must strictly move up; otherwise the window is too
        // small to certify anything further
        match nb.valuation() {
            Some(nt) if nt <= t => {
                return Err(Error::InsufficientPrecision {
                    needed: window * 2,
                    have: window,
                });
            }
            _ => {}
        }
        b = nb;
    }
}

/// Characteristic-not-2 reduction: complete the square and report
/// `ord(b - a^2/4)`.
pub fn reduce_odd_or_zero_char(qf: &QuadraticFactor) -> Result<DoublePointForm> {
    let field = qf.a.field().clone();
    if field.characteristic() == 2 {
        return Err(Error::FieldMismatch);
    }
    let quarter = field.div(&field.one(), &field.from_i64(4))?;
    let asq = qf.a.mul(&qf.a).truncate(qf.window).mul_coef(&quarter);
    let reduced = qf.b.sub(&asq);
    Ok(DoublePointForm {
        ord_a: None,
        ord_b: reduced.valuation(),
        trace_obstruction: false,
        window: qf.window,
    })
}

/// One-call pipeline: prepare and reduce, dispatching on the characteristic.
pub fn double_point_form(
    f: &MultiPoly,
    x: usize,
    z: usize,
    window: usize,
) -> Result<DoublePointForm> {
    let qf = weierstrass_form(f, x, z, window)?;
    if f.field().characteristic() == 2 {
        reduce_char2(&qf)
    } else {
        reduce_odd_or_zero_char(&qf)
    }
}
