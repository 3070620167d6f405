//! Resultants by the fraction-free subresultant pseudo-remainder sequence.
//!
//! The resultant of two polynomials with respect to one variable is computed
//! entirely inside the coefficient ring (polynomials in the remaining
//! variables): pseudo-remainders avoid coefficient inversion, and the
//! subresultant bookkeeping keeps every division exact.  A slow
//! Sylvester-determinant implementation lives in the oracle module and is
//! compared against this one in the test suite.

use crate::error::{Error, Result};
use crate::poly::MultiPoly;

/// Resultant of `f` and `g` with respect to the variable at index `var`.
///
/// Conventions at the edges:
/// - both constant (in `var`) and nonzero: resultant is 1;
/// - `f` constant: `f^(deg g)`; `g` constant: `g^(deg f)`;
/// - either polynomial zero: resultant is 0 (unless the other is a nonzero
///   constant, in which case the empty-matrix convention gives 1 for the
///   pair (constant, zero) of degrees (0, -inf) — we return 0 for a zero
///   argument to match the vanishing-common-root reading).
pub fn resultant(f: &MultiPoly, g: &MultiPoly, var: usize) -> Result<MultiPoly> {
    let field = f.field().clone();
    let vars = f.vars();
    let one = MultiPoly::one(&field, &vars);

    if f.is_zero() || g.is_zero() {
        return Ok(MultiPoly::zero(&field, &vars));
    }
    let df = f.degree_in(var);
    let dg = g.degree_in(var);
    if df == 0 && dg == 0 {
        return Ok(one);
    }
    if df == 0 {
        return Ok(f.pow(dg));
    }
    if dg == 0 {
        return Ok(g.pow(df));
    }

    // arrange deg a >= deg b, tracking the swap sign
    let (mut a, mut b, mut sign_negative) = if df >= dg {
        (f.clone(), g.clone(), false)
    } else {
        (g.clone(), f.clone(), (df % 2 == 1) && (dg % 2 == 1))
    };

    // pull out contents: res(c*A, B) = c^(deg B) * res(A, B)
    let ca = a.content_wrt(var);
    let cb = b.content_wrt(var);
    a = a.divide_exact(&ca)?;
    b = b.divide_exact(&cb)?;
    let mut t = ca.pow(b.degree_in(var)).mul(&cb.pow(a.degree_in(var)));

    let mut gcoef = one.clone();
    let mut h = one.clone();
    loop {
        let da = a.degree_in(var);
        let db = b.degree_in(var);
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            sign_negative = !sign_negative;
        }
        let r = a.prem(&b, var);
        if r.is_zero() {
            // a common divisor of positive degree: resultant vanishes,
            // unless b has degree 0 which cannot happen inside the loop
            return Ok(MultiPoly::zero(&field, &vars));
        }
        a = b;
        // b <- r / (g * h^delta), an exact division by the subresultant rules
        let denom = gcoef.mul(&h.pow(delta));
        b = r.divide_exact(&denom)?;
        gcoef = a.lead_coef_wrt(var);
        // h <- g^delta / h^(delta - 1)
        h = match delta {
            0 => h,
            1 => gcoef.clone(),
            _ => gcoef.pow(delta).divide_exact(&h.pow(delta - 1))?,
        };
        if b.degree_in(var) == 0 {
            break;
        }
    }

    // final adjustment: res = s * t * lc(b)^(deg a) / h^(deg a - 1)
    let da = a.degree_in(var);
    let lb = b; // degree 0 in var
    let num = lb.pow(da);
    let res_core = match da {
        0 => return Err(Error::DegenerateResultant),
        1 => num,
        _ => num.divide_exact(&h.pow(da - 1))?,
    };
    t = t.mul(&res_core);
    if sign_negative {
        t = t.neg();
    }
    Ok(t)
}
