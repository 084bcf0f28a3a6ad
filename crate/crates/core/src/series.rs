//! Hypergeometric series evaluators.
//!
//! Covers the Gauss ₂F₁ (terminating and truncated), ₃F₂, rectangular and
//! triangular Appell F₂, rectangular Appell F₃, the derivative F₂† sums,
//! and the two Kampé-de-Fériet shapes
//!
//! ```text
//! F[2:1;1 / 1:1;1](a; b; p1, p2 / c; q1, q2 | x, y)
//!   = Σ (a)_{i+j} (b)_{i+j} (p1)_i (p2)_j / ((c)_{i+j} (q1)_i (q2)_j i! j!) x^i y^j,
//! F[1:2;2 / 2:0;0](a; p1, p2; q1, q2 / b; c | x, y)
//!   = Σ (a)_{i+j} (p1)_i (p2)_j (q1)_i (q2)_j / ((b)_{i+j} (c)_{i+j} i! j!) x^i y^j.
//! ```
//!
//! Terminating sums run through a generic kernel, so rational inputs are
//! evaluated exactly; complex instantiations use compensated summation.
//!
//! Two readings of a sum with negative-integer parameters exist: rectangular
//! (terminating in both directions, (k+1)(ℓ+1) terms) and triangular
//! (i + j ≤ m). They satisfy the same differential system but differ as
//! functions for odd m > 2·min(k, ℓ), so they are exposed as distinct
//! operations and never auto-selected.

use num_traits::{One, Zero};

use crate::scalar::{
    as_nonpos_int, factorial, pochhammer, pochhammer_derivative, rat, rat_as_nonpos_int, rat_to_cx,
    Cx, Rat, Scalar,
};
use crate::Error;

/// How a series should be summed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SeriesMode {
    /// A parameter forces a finite sum; evaluate all of it.
    Terminating,
    /// Sum until three consecutive terms fall below `tol·max(1, |S|)`,
    /// with a hard cap of `max_terms` terms.
    Truncated { tol: f64, max_terms: usize },
}

impl SeriesMode {
    pub fn truncated(tol: f64) -> Self {
        SeriesMode::Truncated {
            tol,
            max_terms: 100_000,
        }
    }
}

/// A complex scalar result paired with an absolute error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperValue {
    pub value: Cx,
    /// Absolute error estimate: 0 when exact, otherwise a truncation bound
    /// (ten times the first omitted term) plus rounding slack.
    pub abs_err: f64,
    /// True when the value came out of exact rational arithmetic.
    pub exact: bool,
}

impl HyperValue {
    pub fn exact(value: Cx) -> Self {
        HyperValue {
            value,
            abs_err: 0.0,
            exact: true,
        }
    }

    pub fn from_rat(value: &Rat) -> Self {
        HyperValue::exact(rat_to_cx(value))
    }

    pub fn approx(value: Cx, abs_err: f64) -> Self {
        HyperValue {
            value,
            abs_err,
            exact: false,
        }
    }
}

/// Scalar-generic access to "is this parameter the non-positive integer −N".
trait NonPosInt {
    fn nonpos_int(&self) -> Option<u32>;
    fn from_rat_coeff(r: &Rat) -> Self;
}

impl NonPosInt for Rat {
    fn nonpos_int(&self) -> Option<u32> {
        rat_as_nonpos_int(self)
    }
    fn from_rat_coeff(r: &Rat) -> Self {
        r.clone()
    }
}

impl NonPosInt for Cx {
    fn nonpos_int(&self) -> Option<u32> {
        as_nonpos_int(*self)
    }
    fn from_rat_coeff(r: &Rat) -> Self {
        rat_to_cx(r)
    }
}

// ---------------------------------------------------------------------------
// Generalized terminating pFq kernel
// ---------------------------------------------------------------------------

/// Smallest termination index over the upper parameters, if any.
fn termination_index<S: Scalar + NonPosInt>(upper: &[S]) -> Option<u32> {
    upper.iter().filter_map(|a| a.nonpos_int()).min()
}

/// Terminating Σ_{j=0}^{nterm} Π(upper)_j / (Π(lower)_j j!) z^j.
///
/// Errors with `PoleAtC` if a lower parameter vanishes at an index the sum
/// still needs (a lower parameter −N poles the term j = N + 1).
fn hyp_terminating<S: Scalar + NonPosInt>(
    upper: &[S],
    lower: &[S],
    z: &S,
    nterm: u32,
) -> Result<S, Error> {
    for c in lower {
        if let Some(nc) = c.nonpos_int() {
            if nc < nterm {
                return Err(Error::PoleAtC(format!(
                    "lower parameter -{nc} vanishes at index {} <= terminating index {nterm}",
                    nc + 1
                )));
            }
        }
    }
    let mut acc = S::acc_zero();
    let mut term = S::one();
    S::acc_add(&mut acc, term.clone());
    for j in 0..nterm {
        let ji = S::from_i64(j as i64);
        for a in upper {
            term = term.mul_ref(&a.add_ref(&ji));
        }
        for c in lower {
            term = term.div_ref(&c.add_ref(&ji));
        }
        term = term.mul_ref(z).div_ref(&S::from_i64(j as i64 + 1));
        S::acc_add(&mut acc, term.clone());
    }
    Ok(S::acc_total(acc))
}

/// Truncated (convergent) pFq for complex scalars with the stopping rule:
/// three consecutive terms below `tol·max(1, |S|)`.
fn hyp_truncated(
    upper: &[Cx],
    lower: &[Cx],
    z: Cx,
    tol: f64,
    max_terms: usize,
) -> Result<HyperValue, Error> {
    for c in lower {
        if c.nonpos_int().is_some() {
            return Err(Error::PoleAtC(format!(
                "lower parameter {c} is a non-positive integer"
            )));
        }
    }
    if z.norm() >= 1.0 {
        return Err(Error::NonConvergent(format!(
            "|z| = {} >= 1 in truncated mode",
            z.norm()
        )));
    }
    let mut acc = <Cx as Scalar>::acc_zero();
    let mut term = Cx::new(1.0, 0.0);
    Cx::acc_add(&mut acc, term);
    let mut small_run = 0;
    let mut mag_sum = 1.0f64;
    for j in 0..max_terms {
        let jf = j as f64;
        for a in upper {
            term *= a + jf;
        }
        for c in lower {
            term /= c + jf;
        }
        term *= z / (jf + 1.0);
        let partial = acc.0;
        if !term.is_finite() {
            return Err(Error::Domain("non-finite term in series".into()));
        }
        if term.norm() < tol * partial.norm().max(1.0) {
            small_run += 1;
            if small_run >= 3 {
                let value = Cx::acc_total(acc);
                let omitted = term.norm()
                    * (upper.iter().map(|a| (a + jf + 1.0).norm()).product::<f64>()
                        / lower.iter().map(|c| (c + jf + 1.0).norm()).product::<f64>())
                    .max(1.0)
                    * z.norm()
                    / (jf + 2.0).max(1.0);
                let abs_err = 10.0 * omitted.max(term.norm()) + 4.0 * f64::EPSILON * mag_sum;
                return Ok(HyperValue::approx(value, abs_err));
            }
        } else {
            small_run = 0;
        }
        Cx::acc_add(&mut acc, term);
        mag_sum += term.norm();
    }
    Err(Error::BudgetExceeded(format!(
        "{max_terms} terms without reaching tol {tol}"
    )))
}

/// Gauss hypergeometric ₂F₁(a, b; c; z).
///
/// Terminating mode needs a or b to be a non-positive integer, with any
/// degeneracy of c occurring no earlier than the terminating index (so
/// sums like ₂F₁(−k, a; −2k; z) are fine). Truncated mode needs |z| < 1
/// and c off the non-positive integers.
pub fn gauss_2f1(a: Cx, b: Cx, c: Cx, z: Cx, mode: SeriesMode) -> Result<HyperValue, Error> {
    match mode {
        SeriesMode::Terminating => {
            let n = termination_index(&[a, b]).ok_or_else(|| {
                Error::Domain(
                    "terminating 2F1 requires a non-positive-integer upper parameter".into(),
                )
            })?;
            let v = hyp_terminating(&[a, b], &[c], &z, n)?;
            Ok(finite_sum_value(v, n))
        }
        SeriesMode::Truncated { tol, max_terms } => hyp_truncated(&[a, b], &[c], z, tol, max_terms),
    }
}

/// Exact terminating ₂F₁ over rationals.
pub fn gauss_2f1_exact(a: &Rat, b: &Rat, c: &Rat, z: &Rat) -> Result<Rat, Error> {
    let n = termination_index(&[a.clone(), b.clone()]).ok_or_else(|| {
        Error::Domain("terminating 2F1 requires a non-positive-integer upper parameter".into())
    })?;
    hyp_terminating(&[a.clone(), b.clone()], std::slice::from_ref(c), z, n)
}

/// ₃F₂(a1, a2, a3; b1, b2; z), same conventions as [`gauss_2f1`].
pub fn hpg_3f2(
    a1: Cx,
    a2: Cx,
    a3: Cx,
    b1: Cx,
    b2: Cx,
    z: Cx,
    mode: SeriesMode,
) -> Result<HyperValue, Error> {
    match mode {
        SeriesMode::Terminating => {
            let n = termination_index(&[a1, a2, a3]).ok_or_else(|| {
                Error::Domain(
                    "terminating 3F2 requires a non-positive-integer upper parameter".into(),
                )
            })?;
            let v = hyp_terminating(&[a1, a2, a3], &[b1, b2], &z, n)?;
            Ok(finite_sum_value(v, n))
        }
        SeriesMode::Truncated { tol, max_terms } => {
            hyp_truncated(&[a1, a2, a3], &[b1, b2], z, tol, max_terms)
        }
    }
}

/// Exact terminating ₃F₂ over rationals.
pub fn hpg_3f2_exact(
    a1: &Rat,
    a2: &Rat,
    a3: &Rat,
    b1: &Rat,
    b2: &Rat,
    z: &Rat,
) -> Result<Rat, Error> {
    let n = termination_index(&[a1.clone(), a2.clone(), a3.clone()]).ok_or_else(|| {
        Error::Domain("terminating 3F2 requires a non-positive-integer upper parameter".into())
    })?;
    hyp_terminating(
        &[a1.clone(), a2.clone(), a3.clone()],
        &[b1.clone(), b2.clone()],
        z,
        n,
    )
}

fn finite_sum_value(v: Cx, terms: u32) -> HyperValue {
    // rounding slack only; the sum itself is complete
    HyperValue::approx(
        v,
        8.0 * f64::EPSILON * (terms as f64 + 1.0) * v.norm().max(1.0),
    )
}

// ---------------------------------------------------------------------------
// Rectangular Appell sums
// ---------------------------------------------------------------------------

/// (−k)_i / (−2k)_i as an exact rational, for 0 ≤ i ≤ k. For k = 0 the
/// i-range collapses to {0} and the empty ratio is 1; no 0/0 occurs.
pub(crate) fn rect_ratio(k: u32, i: u32) -> Rat {
    debug_assert!(i <= k || k == 0);
    let mut r = Rat::one();
    for t in 0..i as i64 {
        r *= rat(-(k as i64) + t, -(2 * k as i64) + t);
    }
    r
}

/// Rectangular terminating Appell F₂ with b₁ = −k, b₂ = −ℓ, c₁ = −2k,
/// c₂ = −2ℓ:
///
/// Σ_{i=0..k} Σ_{j=0..ℓ} (a)_{i+j} (−k)_i (−ℓ)_j / ((−2k)_i (−2ℓ)_j i! j!) x^i y^j.
fn appell_f2_rect_kernel<S: Scalar + NonPosInt>(a: &S, k: u32, l: u32, x: &S, y: &S) -> S {
    let mut acc = S::acc_zero();
    let mut xpow = S::one();
    for i in 0..=k {
        if i > 0 {
            xpow = xpow.mul_ref(x);
        }
        let ci = rect_ratio(k, i) / factorial(i);
        let mut ypow = S::one();
        for j in 0..=l {
            if j > 0 {
                ypow = ypow.mul_ref(y);
            }
            let coeff = &ci * rect_ratio(l, j) / factorial(j);
            let term = pochhammer(a, i + j)
                .mul_ref(&S::from_rat_coeff(&coeff))
                .mul_ref(&xpow)
                .mul_ref(&ypow);
            S::acc_add(&mut acc, term);
        }
    }
    S::acc_total(acc)
}

pub fn appell_f2_rect(a: Cx, k: u32, l: u32, x: Cx, y: Cx) -> HyperValue {
    let v = appell_f2_rect_kernel(&a, k, l, &x, &y);
    finite_sum_value(v, (k + 1) * (l + 1))
}

pub fn appell_f2_rect_exact(a: &Rat, k: u32, l: u32, x: &Rat, y: &Rat) -> Rat {
    appell_f2_rect_kernel(a, k, l, x, y)
}

/// Rectangular F₂† sum: the F₂ rectangle with each (a)_{i+j} replaced by
/// the Pochhammer derivative (−m)†_{i+j}. Since (−m)†_0 = 0 the (0,0)
/// term always drops out.
fn f2_dagger_kernel<S: Scalar + NonPosInt>(m: u32, k: u32, l: u32, x: &S, y: &S) -> S {
    let mut acc = S::acc_zero();
    let mut xpow = S::one();
    for i in 0..=k {
        if i > 0 {
            xpow = xpow.mul_ref(x);
        }
        let ci = rect_ratio(k, i) / factorial(i);
        let mut ypow = S::one();
        for j in 0..=l {
            if j > 0 {
                ypow = ypow.mul_ref(y);
            }
            let coeff = pochhammer_derivative(m, i + j) * &ci * rect_ratio(l, j) / factorial(j);
            let term = S::from_rat_coeff(&coeff).mul_ref(&xpow).mul_ref(&ypow);
            S::acc_add(&mut acc, term);
        }
    }
    S::acc_total(acc)
}

pub fn f2_dagger_rect(m: u32, k: u32, l: u32, x: Cx, y: Cx) -> HyperValue {
    let v = f2_dagger_kernel(m, k, l, &x, &y);
    finite_sum_value(v, (k + 1) * (l + 1))
}

pub fn f2_dagger_rect_exact(m: u32, k: u32, l: u32, x: &Rat, y: &Rat) -> Rat {
    f2_dagger_kernel(m, k, l, x, y)
}

/// Rectangular Appell F₃ with b₁ = −k, b₂ = −ℓ:
///
/// Σ_{i=0..k} Σ_{j=0..ℓ} (p1)_i (p2)_j (−k)_i (−ℓ)_j / ((c)_{i+j} i! j!) x^i y^j.
fn appell_f3_rect_kernel<S: Scalar + NonPosInt>(
    p1: &S,
    p2: &S,
    k: u32,
    l: u32,
    c: &S,
    x: &S,
    y: &S,
) -> Result<S, Error> {
    if let Some(nc) = c.nonpos_int() {
        if nc < k + l {
            return Err(Error::PoleAtC(format!(
                "(c)_{{i+j}} vanishes inside the rectangle: c = -{nc}, k+l = {}",
                k + l
            )));
        }
    }
    let mut acc = S::acc_zero();
    let mut xpow = S::one();
    for i in 0..=k {
        if i > 0 {
            xpow = xpow.mul_ref(x);
        }
        let negk_i = pochhammer(&S::from_i64(-(k as i64)), i);
        let p1_i = pochhammer(p1, i);
        let mut ypow = S::one();
        for j in 0..=l {
            if j > 0 {
                ypow = ypow.mul_ref(y);
            }
            let negl_j = pochhammer(&S::from_i64(-(l as i64)), j);
            let p2_j = pochhammer(p2, j);
            let den =
                pochhammer(c, i + j).mul_ref(&S::from_rat_coeff(&(factorial(i) * factorial(j))));
            let term = p1_i
                .mul_ref(&p2_j)
                .mul_ref(&negk_i)
                .mul_ref(&negl_j)
                .div_ref(&den)
                .mul_ref(&xpow)
                .mul_ref(&ypow);
            S::acc_add(&mut acc, term);
        }
    }
    Ok(S::acc_total(acc))
}

pub fn appell_f3_rect(
    p1: Cx,
    p2: Cx,
    k: u32,
    l: u32,
    c: Cx,
    x: Cx,
    y: Cx,
) -> Result<HyperValue, Error> {
    let v = appell_f3_rect_kernel(&p1, &p2, k, l, &c, &x, &y)?;
    Ok(finite_sum_value(v, (k + 1) * (l + 1)))
}

pub fn appell_f3_rect_exact(
    p1: &Rat,
    p2: &Rat,
    k: u32,
    l: u32,
    c: &Rat,
    x: &Rat,
    y: &Rat,
) -> Result<Rat, Error> {
    appell_f3_rect_kernel(p1, p2, k, l, c, x, y)
}

// ---------------------------------------------------------------------------
// Triangular Appell F₂
// ---------------------------------------------------------------------------

/// (b)_i / (2b)_i with the limit convention at non-positive-integer b.
///
/// For b = −kb the ratio reads 0 for kb < i ≤ 2kb and, for i > 2kb, the
/// limit b → −kb of the 0/0 pair: a factor 1/2 from (b+kb)/(2b+2kb) times
/// the surviving linear factors. A vanishing (2b)_i at any other b (e.g.
/// half-odd-integer b) has no such convention and is an error.
fn tri_ratio<S: Scalar + NonPosInt>(b: &S, i: u32) -> Result<S, Error> {
    if let Some(kb) = b.nonpos_int() {
        if i > 2 * kb {
            let mut num = Rat::one();
            let mut den = Rat::one();
            for t in 0..i as i64 {
                if t != kb as i64 {
                    num *= rat(-(kb as i64) + t, 1);
                }
                if t != 2 * kb as i64 {
                    den *= rat(-(2 * kb as i64) + t, 1);
                }
            }
            return Ok(S::from_rat_coeff(&(num / (den * rat(2, 1)))));
        }
        if i > kb {
            return Ok(S::zero());
        }
        return Ok(S::from_rat_coeff(&(rect_ratio(kb, i))));
    }
    let num = pochhammer(b, i);
    let den = pochhammer(&b.add_ref(b), i);
    if den.is_zero() {
        return Err(Error::SingularTerm(format!(
            "(2b)_{i} vanishes with (b)_{i} nonzero and no limit convention applies"
        )));
    }
    Ok(num.div_ref(&den))
}

/// Triangular Appell F₂ sum Σ_{i+j ≤ m} (−m)_{i+j} (b)_i (c)_j /
/// ((2b)_i (2c)_j i! j!) x^i y^j.
fn appell_f2_triangular_kernel<S: Scalar + NonPosInt>(
    m: u32,
    b: &S,
    c: &S,
    x: &S,
    y: &S,
) -> Result<S, Error> {
    let mut acc = S::acc_zero();
    let negm = S::from_i64(-(m as i64));
    let mut xpow = S::one();
    for i in 0..=m {
        if i > 0 {
            xpow = xpow.mul_ref(x);
        }
        let bi = tri_ratio(b, i)?;
        let mut ypow = S::one();
        for j in 0..=(m - i) {
            if j > 0 {
                ypow = ypow.mul_ref(y);
            }
            let cj = tri_ratio(c, j)?;
            let coeff = Rat::one() / (factorial(i) * factorial(j));
            let term = pochhammer(&negm, i + j)
                .mul_ref(&bi)
                .mul_ref(&cj)
                .mul_ref(&S::from_rat_coeff(&coeff))
                .mul_ref(&xpow)
                .mul_ref(&ypow);
            S::acc_add(&mut acc, term);
        }
    }
    Ok(S::acc_total(acc))
}

pub fn appell_f2_triangular(m: u32, b: Cx, c: Cx, x: Cx, y: Cx) -> Result<HyperValue, Error> {
    let v = appell_f2_triangular_kernel(m, &b, &c, &x, &y)?;
    Ok(finite_sum_value(v, (m + 1) * (m + 2) / 2))
}

pub fn appell_f2_triangular_exact(
    m: u32,
    b: &Rat,
    c: &Rat,
    x: &Rat,
    y: &Rat,
) -> Result<Rat, Error> {
    appell_f2_triangular_kernel(m, b, c, x, y)
}

// ---------------------------------------------------------------------------
// Kampé-de-Fériet double sums
// ---------------------------------------------------------------------------

/// Status of a single-direction Pochhammer ratio Π (p)_i / Π (q)_i.
/// `num_zero_at`/`den_zero_at` give the first index where the respective
/// product vanishes, if ever.
fn direction_bounds<S: Scalar + NonPosInt>(nums: &[&S], dens: &[&S]) -> (Option<u32>, Option<u32>) {
    let num_zero = nums
        .iter()
        .filter_map(|p| p.nonpos_int())
        .min()
        .map(|t| t + 1);
    let den_zero = dens
        .iter()
        .filter_map(|q| q.nonpos_int())
        .min()
        .map(|t| t + 1);
    (num_zero, den_zero)
}

fn check_direction(num_zero: Option<u32>, den_zero: Option<u32>, needed: u32) -> Result<(), Error> {
    if let Some(dz) = den_zero {
        if dz <= needed && num_zero.map(|nz| nz > dz).unwrap_or(true) {
            return Err(Error::PoleAtC(format!(
                "denominator row parameter vanishes at index {dz} before the sum terminates"
            )));
        }
    }
    Ok(())
}

/// Terminating double sum over a rectangle with i+j-coupled and per-index
/// Pochhammer blocks. `coupled_num`/`coupled_den` run over i+j; `i_num`,
/// `i_den` over i; `j_num`, `j_den` over j.
#[allow(clippy::too_many_arguments)]
fn kampe_rect<S: Scalar + NonPosInt>(
    coupled_num: &[&S],
    coupled_den: &[&S],
    i_num: &[&S],
    i_den: &[&S],
    j_num: &[&S],
    j_den: &[&S],
    imax: u32,
    jmax: u32,
    x: &S,
    y: &S,
) -> Result<S, Error> {
    // coupled lower parameters must not vanish inside the needed range
    for q in coupled_den {
        if let Some(nq) = q.nonpos_int() {
            let cn = coupled_num.iter().filter_map(|p| p.nonpos_int()).min();
            if nq < imax + jmax && cn.map(|t| t > nq).unwrap_or(true) {
                return Err(Error::PoleAtC(format!(
                    "coupled lower parameter -{nq} vanishes inside the rectangle"
                )));
            }
        }
    }
    let (inz, idz) = direction_bounds(i_num, i_den);
    check_direction(inz, idz, imax)?;
    let (jnz, jdz) = direction_bounds(j_num, j_den);
    check_direction(jnz, jdz, jmax)?;

    let ratio_at = |nums: &[&S], dens: &[&S], t: u32, zero_at: Option<u32>| -> S {
        if zero_at.map(|z| t >= z).unwrap_or(false) {
            return S::zero();
        }
        let mut r = S::one();
        for p in nums {
            r = r.mul_ref(&pochhammer(p, t));
        }
        for q in dens {
            r = r.div_ref(&pochhammer(q, t));
        }
        r
    };

    let mut acc = S::acc_zero();
    let mut xpow = S::one();
    for i in 0..=imax {
        if i > 0 {
            xpow = xpow.mul_ref(x);
        }
        let ri = ratio_at(i_num, i_den, i, inz);
        if ri.is_zero() && i > 0 {
            continue;
        }
        let mut ypow = S::one();
        for j in 0..=jmax {
            if j > 0 {
                ypow = ypow.mul_ref(y);
            }
            let rj = ratio_at(j_num, j_den, j, jnz);
            if rj.is_zero() && j > 0 {
                continue;
            }
            let mut term = ri.clone().mul_ref(&rj).mul_ref(&xpow).mul_ref(&ypow);
            for p in coupled_num {
                term = term.mul_ref(&pochhammer(p, i + j));
            }
            for q in coupled_den {
                term = term.div_ref(&pochhammer(q, i + j));
            }
            term = term.div_ref(&S::from_rat_coeff(&(factorial(i) * factorial(j))));
            S::acc_add(&mut acc, term);
        }
    }
    Ok(S::acc_total(acc))
}

/// Truncated double sum (complex only), summed row by row in the second
/// index. Every term is built multiplicatively from O(1) neighbour
/// ratios, so large Pochhammer products never materialize.
#[allow(clippy::too_many_arguments)]
fn kampe_truncated(
    coupled_num: &[Cx],
    coupled_den: &[Cx],
    i_num: &[Cx],
    i_den: &[Cx],
    j_num: &[Cx],
    j_den: &[Cx],
    imax: Option<u32>,
    jmax: Option<u32>,
    x: Cx,
    y: Cx,
    tol: f64,
    max_terms: usize,
) -> Result<HyperValue, Error> {
    if imax.is_none() && x.norm() >= 1.0 {
        return Err(Error::NonConvergent(format!(
            "|x| = {} >= 1 with a non-terminating first direction",
            x.norm()
        )));
    }
    if jmax.is_none() && y.norm() >= 1.0 {
        return Err(Error::NonConvergent(format!(
            "|y| = {} >= 1 with a non-terminating second direction",
            y.norm()
        )));
    }
    for q in coupled_den {
        if q.nonpos_int().is_some() {
            return Err(Error::PoleAtC(format!(
                "coupled lower parameter {q} is a non-positive integer in truncated mode"
            )));
        }
    }
    // a per-direction denominator may degenerate if that direction
    // terminates strictly before the pole index
    for (dens, bound) in [(i_den, imax), (j_den, jmax)] {
        for q in dens {
            if let Some(nq) = q.nonpos_int() {
                if bound.map(|b| b > nq).unwrap_or(true) {
                    return Err(Error::PoleAtC(format!(
                        "lower parameter {q} poles at index {} before termination",
                        nq + 1
                    )));
                }
            }
        }
    }
    let prod_at = |params: &[Cx], t: f64| -> Cx { params.iter().map(|p| p + t).product() };
    let mut acc = <Cx as Scalar>::acc_zero();
    let mut row_start = Cx::new(1.0, 0.0); // term at (0, j)
    let mut small_rows = 0;
    let mut terms_used = 0usize;
    let mut j = 0u32;
    loop {
        // sum row j over i with the in-row ratio
        let mut row = Cx::new(0.0, 0.0);
        let mut term = row_start;
        let mut small_in_row = 0;
        let mut i = 0u32;
        loop {
            row += term;
            terms_used += 1;
            if terms_used > max_terms {
                return Err(Error::BudgetExceeded(format!(
                    "{terms_used} terms without reaching tol {tol}"
                )));
            }
            if let Some(im) = imax {
                if i >= im {
                    break;
                }
            }
            let numer = prod_at(coupled_num, (i + j) as f64) * prod_at(i_num, i as f64);
            let denom =
                prod_at(coupled_den, (i + j) as f64) * prod_at(i_den, i as f64) * (i as f64 + 1.0);
            term *= numer / denom * x;
            if term.is_zero() {
                break;
            }
            if !term.is_finite() {
                return Err(Error::Domain("non-finite term in double sum".into()));
            }
            if imax.is_none() {
                let scale = row.norm().max(acc.0.norm()).max(1.0);
                if term.norm() < 1e-3 * tol * scale {
                    small_in_row += 1;
                    if small_in_row >= 3 {
                        break;
                    }
                } else {
                    small_in_row = 0;
                }
            }
            i += 1;
        }
        let partial = acc.0;
        Cx::acc_add(&mut acc, row);
        if row.norm() < tol * partial.norm().max(1.0) && j > 0 {
            small_rows += 1;
            if small_rows >= 3 {
                let abs_err = 10.0 * row.norm() + 8.0 * f64::EPSILON * partial.norm().max(1.0);
                return Ok(HyperValue::approx(Cx::acc_total(acc), abs_err));
            }
        } else {
            small_rows = 0;
        }
        if let Some(jm) = jmax {
            if j >= jm {
                return Ok(finite_sum_value(Cx::acc_total(acc), terms_used as u32));
            }
        }
        // advance the row head (0, j) → (0, j+1)
        let numer = prod_at(coupled_num, j as f64) * prod_at(j_num, j as f64);
        let denom = prod_at(coupled_den, j as f64) * prod_at(j_den, j as f64) * (j as f64 + 1.0);
        row_start *= numer / denom * y;
        if row_start.is_zero() && jmax.is_none() {
            return Ok(finite_sum_value(Cx::acc_total(acc), terms_used as u32));
        }
        if !row_start.is_finite() {
            return Err(Error::Domain("non-finite row head in double sum".into()));
        }
        j += 1;
    }
}

/// F[2:1;1 / 1:1;1](a; b; p1, p2 / c; q1, q2 | x, y).
///
/// Terminating mode requires p1, p2 to be non-positive integers.
#[allow(clippy::too_many_arguments)]
pub fn kampe_211(
    a: Cx,
    b: Cx,
    p1: Cx,
    p2: Cx,
    c: Cx,
    q1: Cx,
    q2: Cx,
    x: Cx,
    y: Cx,
    mode: SeriesMode,
) -> Result<HyperValue, Error> {
    match mode {
        SeriesMode::Terminating => {
            let imax = p1.nonpos_int().ok_or_else(|| {
                Error::Domain("terminating mode requires p1 to be a non-positive integer".into())
            })?;
            let jmax = p2.nonpos_int().ok_or_else(|| {
                Error::Domain("terminating mode requires p2 to be a non-positive integer".into())
            })?;
            let v = kampe_rect(
                &[&a, &b],
                &[&c],
                &[&p1],
                &[&q1],
                &[&p2],
                &[&q2],
                imax,
                jmax,
                &x,
                &y,
            )?;
            Ok(finite_sum_value(v, (imax + 1) * (jmax + 1)))
        }
        SeriesMode::Truncated { tol, max_terms } => kampe_truncated(
            &[a, b],
            &[c],
            &[p1],
            &[q1],
            &[p2],
            &[q2],
            p1.nonpos_int(),
            p2.nonpos_int(),
            x,
            y,
            tol,
            max_terms,
        ),
    }
}

/// Exact terminating F[2:1;1 / 1:1;1] over rationals.
#[allow(clippy::too_many_arguments)]
pub fn kampe_211_exact(
    a: &Rat,
    b: &Rat,
    p1: &Rat,
    p2: &Rat,
    c: &Rat,
    q1: &Rat,
    q2: &Rat,
    x: &Rat,
    y: &Rat,
) -> Result<Rat, Error> {
    let imax = p1.nonpos_int().ok_or_else(|| {
        Error::Domain("terminating mode requires p1 to be a non-positive integer".into())
    })?;
    let jmax = p2.nonpos_int().ok_or_else(|| {
        Error::Domain("terminating mode requires p2 to be a non-positive integer".into())
    })?;
    kampe_rect(&[a, b], &[c], &[p1], &[q1], &[p2], &[q2], imax, jmax, x, y)
}

/// F[1:2;2 / 2:0;0](a; p1, p2; q1, q2 / b; c | x, y), where (p1, q1)
/// multiply the first index and (p2, q2) the second.
///
/// Terminating mode requires each direction to carry a non-positive
/// integer among its two upper parameters.
#[allow(clippy::too_many_arguments)]
pub fn kampe_122(
    a: Cx,
    p1: Cx,
    p2: Cx,
    q1: Cx,
    q2: Cx,
    b: Cx,
    c: Cx,
    x: Cx,
    y: Cx,
    mode: SeriesMode,
) -> Result<HyperValue, Error> {
    let imax = [p1, q1].iter().filter_map(|s| s.nonpos_int()).min();
    let jmax = [p2, q2].iter().filter_map(|s| s.nonpos_int()).min();
    match mode {
        SeriesMode::Terminating => {
            let imax = imax.ok_or_else(|| {
                Error::Domain("terminating mode requires p1 or q1 non-positive integer".into())
            })?;
            let jmax = jmax.ok_or_else(|| {
                Error::Domain("terminating mode requires p2 or q2 non-positive integer".into())
            })?;
            let v = kampe_rect(
                &[&a],
                &[&b, &c],
                &[&p1, &q1],
                &[],
                &[&p2, &q2],
                &[],
                imax,
                jmax,
                &x,
                &y,
            )?;
            Ok(finite_sum_value(v, (imax + 1) * (jmax + 1)))
        }
        SeriesMode::Truncated { tol, max_terms } => kampe_truncated(
            &[a],
            &[b, c],
            &[p1, q1],
            &[],
            &[p2, q2],
            &[],
            imax,
            jmax,
            x,
            y,
            tol,
            max_terms,
        ),
    }
}

/// Exact terminating F[1:2;2 / 2:0;0] over rationals.
#[allow(clippy::too_many_arguments)]
pub fn kampe_122_exact(
    a: &Rat,
    p1: &Rat,
    p2: &Rat,
    q1: &Rat,
    q2: &Rat,
    b: &Rat,
    c: &Rat,
    x: &Rat,
    y: &Rat,
) -> Result<Rat, Error> {
    let imax = [p1, q1]
        .iter()
        .filter_map(|s| s.nonpos_int())
        .min()
        .ok_or_else(|| {
            Error::Domain("terminating mode requires p1 or q1 non-positive integer".into())
        })?;
    let jmax = [p2, q2]
        .iter()
        .filter_map(|s| s.nonpos_int())
        .min()
        .ok_or_else(|| {
            Error::Domain("terminating mode requires p2 or q2 non-positive integer".into())
        })?;
    kampe_rect(
        &[a],
        &[b, c],
        &[p1, q1],
        &[],
        &[p2, q2],
        &[],
        imax,
        jmax,
        x,
        y,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_i, rat_to_f64};
    use num_traits::{One, Zero};

    fn cx(x: f64) -> Cx {
        Cx::new(x, 0.0)
    }

    fn assert_close(a: Cx, b: Cx, tol: f64) {
        assert!(
            (a - b).norm() <= tol * a.norm().max(b.norm()).max(1.0),
            "{a} vs {b}"
        );
    }

    #[test]
    fn gauss_2f1_basics() {
        // z = 0 regardless of parameters
        let v = gauss_2f1(
            cx(0.3),
            cx(1.7),
            cx(0.9),
            cx(0.0),
            SeriesMode::truncated(1e-14),
        )
        .unwrap();
        assert_close(v.value, cx(1.0), 1e-15);
        // 2F1(1,1;2;1/2) = -ln(1-z)/z = 2 ln 2
        let v = gauss_2f1(
            cx(1.0),
            cx(1.0),
            cx(2.0),
            cx(0.5),
            SeriesMode::truncated(1e-15),
        )
        .unwrap();
        assert_close(v.value, cx(2.0 * std::f64::consts::LN_2), 1e-13);
        assert!((v.value.re - 1.386294361120).abs() < 1e-12);
        // two-term terminating sum: 2F1(-1, b; c; z) = 1 - b z / c
        let v = gauss_2f1(cx(-1.0), cx(2.3), cx(1.1), cx(0.7), SeriesMode::Terminating).unwrap();
        assert_close(v.value, cx(1.0 - 2.3 * 0.7 / 1.1), 1e-14);
    }

    #[test]
    fn gauss_2f1_negative_lower_parameter() {
        // 2F1(-k, a; -2k; z) is a valid (k+1)-term sum
        let v = gauss_2f1(
            cx(-2.0),
            cx(0.7),
            cx(-4.0),
            cx(0.3),
            SeriesMode::Terminating,
        )
        .unwrap();
        // direct: 1 + (-2)(0.7)/(-4) * 0.3 + (-2)(-1)(0.7)(1.7)/((-4)(-3)*2) * 0.09
        let expect = 1.0 + (-2.0 * 0.7 / -4.0) * 0.3 + (2.0 * 0.7 * 1.7 / 24.0) * 0.09;
        assert_close(v.value, cx(expect), 1e-14);
        // but a pole strictly before the terminating index is rejected
        assert!(gauss_2f1(
            cx(-3.0),
            cx(0.7),
            cx(-2.0),
            cx(0.3),
            SeriesMode::Terminating
        )
        .is_err());
        // truncated mode rejects non-positive integer c outright
        assert!(gauss_2f1(
            cx(0.3),
            cx(0.7),
            cx(-2.0),
            cx(0.3),
            SeriesMode::truncated(1e-10)
        )
        .is_err());
        // and |z| >= 1
        assert!(gauss_2f1(
            cx(0.3),
            cx(0.7),
            cx(0.9),
            cx(1.0),
            SeriesMode::truncated(1e-10)
        )
        .is_err());
    }

    #[test]
    fn gauss_2f1_exact_at_argument_two() {
        // 2F1(a, -l; -2l; 2) = ((a+1)/2)_l / (1/2)_l, exactly
        use crate::scalar::pochhammer;
        for l in 0..=10u32 {
            for num in [-7i64, -3, -1, 1, 2, 5, 9] {
                let a = rat(num, 4);
                let lhs =
                    gauss_2f1_exact(&a, &rat_i(-(l as i64)), &rat_i(-2 * l as i64), &rat_i(2))
                        .unwrap();
                let rhs =
                    pochhammer(&((&a + Rat::one()) / rat_i(2)), l) / pochhammer(&rat(1, 2), l);
                assert_eq!(lhs, rhs, "l={l} a={a}");
            }
        }
    }

    #[test]
    fn hpg_3f2_basics() {
        let v = hpg_3f2(
            cx(0.3),
            cx(0.4),
            cx(0.5),
            cx(1.2),
            cx(1.3),
            cx(0.0),
            SeriesMode::truncated(1e-14),
        )
        .unwrap();
        assert_close(v.value, cx(1.0), 1e-15);
        // terminating two-term: 1 - a2 a3/(b1 b2) z
        let v = hpg_3f2(
            cx(-1.0),
            cx(2.0),
            cx(3.0),
            cx(1.5),
            cx(2.5),
            cx(0.4),
            SeriesMode::Terminating,
        )
        .unwrap();
        assert_close(v.value, cx(1.0 - 2.0 * 3.0 / (1.5 * 2.5) * 0.4), 1e-14);
    }

    #[test]
    fn appell_f2_rect_small_cases() {
        // empty rectangle
        let v = appell_f2_rect(cx(0.77), 0, 0, cx(3.0), cx(-2.0));
        assert_close(v.value, cx(1.0), 1e-15);
        // (a, 1, 0, x, y) = 1 + a x / 2
        let v = appell_f2_rect(cx(0.6), 1, 0, cx(0.3), cx(9.0));
        assert_close(v.value, cx(1.0 + 0.6 * 0.3 / 2.0), 1e-14);
        // coupling y = 2 - x with a = -1 annihilates the sum
        let v = appell_f2_rect_exact(&rat_i(-1), 1, 1, &rat(2, 5), &(rat_i(2) - rat(2, 5)));
        assert_eq!(v, Rat::zero());
    }

    #[test]
    fn appell_f3_rect_small_cases() {
        let v = appell_f3_rect(cx(1.3), cx(0.2), 0, 0, cx(0.9), cx(5.0), cx(6.0)).unwrap();
        assert_close(v.value, cx(1.0), 1e-15);
        // (2, 1, 1, 0, c, x, y) = 1 - 2x/c
        let a = 0.37;
        let v = appell_f3_rect(cx(2.0), cx(1.0), 1, 0, cx(a + 2.0), cx(0.3), cx(0.9)).unwrap();
        assert_close(v.value, cx(1.0 - 2.0 * 0.3 / (a + 2.0)), 1e-14);
        // pole detection
        assert!(appell_f3_rect(cx(2.0), cx(1.0), 1, 1, cx(-1.0), cx(0.3), cx(0.9)).is_err());
    }

    #[test]
    fn f2_f3_reversal_exact() {
        // F2(a; -k,-l; -2k,-2l | x, y) =
        //   k! l! (a)_{k+l} / ((2k)!(2l)!) x^k y^l F3(k+1,l+1;-k,-l;1-a-k-l | 1/x, 1/y)
        use crate::scalar::{factorial, pochhammer};
        for k in 0..=4u32 {
            for l in 0..=4u32 {
                let a = rat(3, 7);
                let x = rat(5, 3);
                let y = rat(-7, 4);
                let lhs = appell_f2_rect_exact(&a, k, l, &x, &y);
                let cc = rat_i(1) - &a - rat_i((k + l) as i64);
                let f3 = appell_f3_rect_exact(
                    &rat_i(k as i64 + 1),
                    &rat_i(l as i64 + 1),
                    k,
                    l,
                    &cc,
                    &(Rat::one() / &x),
                    &(Rat::one() / &y),
                )
                .unwrap();
                let front = factorial(k) * factorial(l) * pochhammer(&a, k + l)
                    / (factorial(2 * k) * factorial(2 * l));
                let xp = num_traits::pow::Pow::pow(&x, k as i32);
                let yp = num_traits::pow::Pow::pow(&y, l as i32);
                assert_eq!(lhs, front * xp * yp * f3, "k={k} l={l}");
            }
        }
    }

    #[test]
    fn triangular_sum_vanishes_for_odd_m() {
        // The triangular F2(-m; b, c; 2b, 2c | x, 2-x) sum vanishes for odd m.
        let m = 3;
        let v = appell_f2_triangular(m, cx(0.7), cx(-0.3), cx(0.4), cx(1.6)).unwrap();
        assert!(v.value.norm() < 1e-12, "got {}", v.value);
        // exact vanishing over rationals
        let v = appell_f2_triangular_exact(5, &rat(7, 10), &rat(-3, 10), &rat(2, 5), &rat(8, 5))
            .unwrap();
        assert_eq!(v, Rat::zero());
        // trivial cases
        let v = appell_f2_triangular(0, cx(0.5), cx(0.25), cx(3.0), cx(4.0)).unwrap();
        assert_close(v.value, cx(1.0), 1e-15);
        let v = appell_f2_triangular(1, cx(0.5), cx(0.25), cx(0.4), cx(1.6)).unwrap();
        assert!(v.value.norm() < 1e-15);
    }

    #[test]
    fn triangular_limit_convention_and_singular_terms() {
        // b a negative integer: the limit convention applies, sum is finite
        let v = appell_f2_triangular(5, cx(-1.0), cx(0.3), cx(0.2), cx(1.8)).unwrap();
        assert!(v.value.is_finite());
        // the triangular reading still vanishes for odd m here (vanishing is
        // generic in b, c)
        assert!(v.value.norm() < 1e-12);
        // b half-odd-integer: (2b)_i hits zero with no convention
        let e = appell_f2_triangular(4, cx(-0.5), cx(0.3), cx(0.2), cx(1.8));
        assert!(matches!(e, Err(Error::SingularTerm(_))));
    }

    #[test]
    fn f2_dagger_values() {
        // (m, 0, 0, x, y) = (−m)†_0 = 0
        let v = f2_dagger_rect(3, 0, 0, cx(0.4), cx(0.6));
        assert!(v.value.norm() == 0.0);
        // (0, 1, 0, x, y) = x/2
        let v = f2_dagger_rect(0, 1, 0, cx(0.4), cx(0.6));
        assert_close(v.value, cx(0.2), 1e-15);
        // exact polynomial coefficients for m=2, k=l=1, cross-checked against
        // the finite difference of the plain rectangle in a
        let x = cx(0.37);
        let y = cx(1.21);
        let h = 1e-6;
        let up = appell_f2_rect(cx(-2.0 + h), 1, 1, x, y).value;
        let dn = appell_f2_rect(cx(-2.0 - h), 1, 1, x, y).value;
        let fd = (up - dn) / (2.0 * h);
        let v = f2_dagger_rect(2, 1, 1, x, y);
        assert_close(v.value, fd, 1e-8);
    }

    #[test]
    fn kampe_termination_and_two_term_expansions() {
        // terminating with p1 = p2 = 0 is just 1
        let v = kampe_211(
            cx(0.3),
            cx(0.7),
            cx(0.0),
            cx(0.0),
            cx(1.1),
            cx(1.2),
            cx(1.3),
            cx(4.0),
            cx(5.0),
            SeriesMode::Terminating,
        )
        .unwrap();
        assert_close(v.value, cx(1.0), 1e-15);
        // kampe_122 (1/2; 2,1; -1,0; a+2; -a | u, v) = 1 + (1/2)(2)(-1)/((a+2)(-a)) u
        let a = 0.43;
        let u = 0.21;
        let v = kampe_122(
            cx(0.5),
            cx(2.0),
            cx(1.0),
            cx(-1.0),
            cx(0.0),
            cx(a + 2.0),
            cx(-a),
            cx(u),
            cx(0.77),
            SeriesMode::Terminating,
        )
        .unwrap();
        let expect = 1.0 + 0.5 * 2.0 * (-1.0) / ((a + 2.0) * (-a)) * u;
        assert_close(v.value, cx(expect), 1e-13);
    }

    #[test]
    fn kampe_reversal_exact() {
        // reversing the summation order in both directions:
        // F[2:1;1](a; -a-2k-2l; -k,-l / 1/2-k-l; -2k,-2l | x, 1-x)
        //   = (a)_{2k+2l+1} k! l! x^k (1-x)^l
        //     / ((a+k+l)(1/2)_{k+l}(2k)!(2l)!)
        //     * F[1:2;2](1/2; k+1,l+1; -k,-l / a+k+l+1; 1-a-k-l | 1/x, 1/(1-x))
        use crate::scalar::{factorial, pochhammer};
        for k in 0..=3u32 {
            for l in 0..=3u32 {
                let a = rat(2, 5);
                let x = rat(3, 8);
                let kl = rat_i((k + l) as i64);
                let lhs = kampe_211_exact(
                    &a,
                    &(-&a - rat_i(2 * (k + l) as i64)),
                    &rat_i(-(k as i64)),
                    &rat_i(-(l as i64)),
                    &(rat(1, 2) - &kl),
                    &rat_i(-2 * k as i64),
                    &rat_i(-2 * l as i64),
                    &x,
                    &(Rat::one() - &x),
                )
                .unwrap();
                let rhs_f = kampe_122_exact(
                    &rat(1, 2),
                    &rat_i(k as i64 + 1),
                    &rat_i(l as i64 + 1),
                    &rat_i(-(k as i64)),
                    &rat_i(-(l as i64)),
                    &(&a + &kl + Rat::one()),
                    &(Rat::one() - &a - &kl),
                    &(Rat::one() / &x),
                    &(Rat::one() / (Rat::one() - &x)),
                )
                .unwrap();
                let front = pochhammer(&a, 2 * (k + l) + 1)
                    * factorial(k)
                    * factorial(l)
                    * num_traits::pow::Pow::pow(&x, k as i32)
                    * num_traits::pow::Pow::pow(&(Rat::one() - &x), l as i32)
                    / ((&a + &kl)
                        * pochhammer(&rat(1, 2), k + l)
                        * factorial(2 * k)
                        * factorial(2 * l));
                assert_eq!(lhs, front * rhs_f, "k={k} l={l}");
            }
        }
    }

    #[test]
    fn truncation_error_is_a_bound() {
        // doubling max_terms moves the value by less than abs_err
        let mut rng = 0x9e3779b97f4a7c15u64;
        let mut next = || {
            rng ^= rng << 13;
            rng ^= rng >> 7;
            rng ^= rng << 17;
            (rng >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..100 {
            let a = cx(3.0 * next() - 1.5);
            let b = cx(3.0 * next() - 1.5);
            let c = cx(1.0 + 2.0 * next());
            let z = cx(0.85 * next());
            let tol = 1e-9;
            let coarse = gauss_2f1(a, b, c, z, SeriesMode::Truncated { tol, max_terms: 60 });
            let fine = gauss_2f1(
                a,
                b,
                c,
                z,
                SeriesMode::Truncated {
                    tol,
                    max_terms: 120,
                },
            );
            if let (Ok(coarse), Ok(fine)) = (coarse, fine) {
                assert!(
                    (coarse.value - fine.value).norm() <= coarse.abs_err.max(1e-15),
                    "a={a} b={b} c={c} z={z}: moved {} > err {}",
                    (coarse.value - fine.value).norm(),
                    coarse.abs_err
                );
            }
        }
    }

    #[test]
    fn conjugate_relations_exact_at_rational_sqrt() {
        // with s = sqrt(z) rational, both conjugate-argument relations are
        // finite rational identities and can be checked exactly:
        // (1+s)^{k+l} F2(a; ..|+) = (-1)^l ((a+1)/2)_l/((a+1)/2+k)_l
        //                           (1-s)^{k+l} F2(-a-2k-2l; ..|-)
        use crate::scalar::pochhammer;
        for (k, l) in [(0u32, 0u32), (1, 0), (2, 1), (3, 3)] {
            for s in [rat(1, 2), rat(1, 3), rat(3, 5)] {
                let a = rat(4, 7);
                let one = Rat::one();
                let xp = rat_i(2) * &s / (&one + &s);
                let yp = rat_i(2) / (&one + &s);
                let xm = rat_i(2) * &s / (&s - &one);
                let ym = rat_i(2) / (&one - &s);
                let kl = (k + l) as i32;
                let lhs = num_traits::pow::Pow::pow(&(&one + &s), kl)
                    * appell_f2_rect_exact(&a, k, l, &xp, &yp);
                let a2 = -&a - rat_i(2 * (k + l) as i64);
                let half_shift = (&a + &one) / rat_i(2);
                let coef = pochhammer(&half_shift, l)
                    / pochhammer(&(&half_shift + rat_i(k as i64)), l)
                    * if l % 2 == 0 {
                        one.clone()
                    } else {
                        -one.clone()
                    };
                let rhs = coef
                    * num_traits::pow::Pow::pow(&(&one - &s), kl)
                    * appell_f2_rect_exact(&a2, k, l, &xm, &ym);
                assert_eq!(lhs, rhs, "k={k} l={l} s={s}");

                // F3 companion: F3(..; a+k+l+1 | (s-1)/2s, (1-s)/2)
                //   = (a)_{k+l} ((a+1)/2+k)_l / ((1+a+k+l)_{k+l} ((a+1)/2)_l)
                //     F3(..; 1-a-k-l | (s+1)/2s, (1+s)/2)
                let c1 = &a + rat_i((k + l) as i64 + 1);
                let f3a = appell_f3_rect_exact(
                    &rat_i(k as i64 + 1),
                    &rat_i(l as i64 + 1),
                    k,
                    l,
                    &c1,
                    &((&s - &one) / (rat_i(2) * &s)),
                    &((&one - &s) / rat_i(2)),
                )
                .unwrap();
                let c2 = &one - &a - rat_i((k + l) as i64);
                let f3b = appell_f3_rect_exact(
                    &rat_i(k as i64 + 1),
                    &rat_i(l as i64 + 1),
                    k,
                    l,
                    &c2,
                    &((&s + &one) / (rat_i(2) * &s)),
                    &((&one + &s) / rat_i(2)),
                )
                .unwrap();
                let coef = pochhammer(&a, k + l) * pochhammer(&(&half_shift + rat_i(k as i64)), l)
                    / (pochhammer(&c1, k + l) * pochhammer(&half_shift, l));
                assert_eq!(f3a, coef * f3b, "F3 companion k={k} l={l} s={s}");
            }
        }
    }

    #[test]
    fn exact_and_float_paths_agree() {
        let a = rat(2, 3);
        let x = rat(1, 4);
        let y = rat(7, 4);
        let exact = appell_f2_rect_exact(&a, 2, 3, &x, &y);
        let float = appell_f2_rect(cx(2.0 / 3.0), 2, 3, cx(0.25), cx(1.75));
        assert!((rat_to_f64(&exact) - float.value.re).abs() < 1e-13);
    }
}
