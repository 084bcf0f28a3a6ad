//! Exact construction of algebraic transformations between dihedral
//! hypergeometric functions.
//!
//! Two families:
//!
//! - the degree-n pull-back z = x θ₂(x)²/θ₁(x)² with
//!   θ₁(x) = Σ C(n,2k) x^k, θ₂(x) = Σ C(n,2k+1) x^k, which satisfy
//!   (1−t)ⁿ = θ₁(t²) − t θ₂(t²) and (1−x)ⁿ = θ₁² − x θ₂²;
//!
//! - Klein pull-back coverings for a finite dihedral equation with local
//!   exponent differences (k+1/2, ℓ+1/2, n/m): expanding
//!   (1+√x)ⁿ G(√x)^m = Θ₁(x) + x^{k+1/2} Θ₂(x) gives the covering
//!   Φ = x^{2k+1} Θ₂²/Θ₁² of degree (k+ℓ)m + n, with the product relation
//!   Θ₁² − x^{2k+1} Θ₂² = C (1−x)ⁿ Ψ(x)^m.
//!
//! Everything here is exact big-rational arithmetic; the structural
//! vanishing statements and the product relation are asserted, not
//! approximated.

use num_traits::{One, Pow, Zero};

use crate::poly::{RatPoly, SqrtPoly};
use crate::scalar::{binomial, factorial, pochhammer, powc, rat, rat_i, rat_to_cx, Cx, Rat};
use crate::series::appell_f2_rect;
use crate::Error;

/// θ₁(x) = Σ_k C(n, 2k) x^k and θ₂(x) = Σ_k C(n, 2k+1) x^k.
pub fn theta_pair(n: u32) -> (RatPoly, RatPoly) {
    let mut t1 = Vec::with_capacity(n as usize / 2 + 1);
    let mut t2 = Vec::with_capacity(n as usize / 2 + 1);
    for k in 0..=(n as i64 / 2) {
        t1.push(binomial(n, 2 * k));
    }
    for k in 0..=((n as i64 - 1) / 2) {
        t2.push(binomial(n, 2 * k + 1));
    }
    (RatPoly::from_coeffs(t1), RatPoly::from_coeffs(t2))
}

/// Exact check of both defining identities:
/// (1−t)ⁿ = θ₁(t²) − t θ₂(t²) as a polynomial in t = √x, and
/// (1−x)ⁿ = θ₁(x)² − x θ₂(x)².
pub fn verify_theta(n: u32) -> bool {
    let (t1, t2) = theta_pair(n);
    let expand = SqrtPoly::one_plus_sqrt_pow(n, -1);
    if expand.even != t1 || expand.odd != t2.neg() {
        return false;
    }
    let lhs = RatPoly::from_coeffs(vec![Rat::one(), -Rat::one()]).pow(n);
    let rhs = t1.mul(&t1).sub(&t2.mul(&t2).shift_up(1));
    lhs == rhs
}

/// Chebyshev polynomials of the first and second kind at a rational point,
/// by the three-term recurrence; returns (T_n, U_{n−1}).
pub fn chebyshev_t_u(n: u32, x: &Rat) -> (Rat, Rat) {
    let two_x = rat_i(2) * x;
    let (mut t_prev, mut t_cur) = (Rat::one(), x.clone());
    let (mut u_prev, mut u_cur) = (Rat::one(), two_x.clone());
    if n == 0 {
        return (t_prev, u_prev);
    }
    for _ in 1..n {
        let t_next = &two_x * &t_cur - &t_prev;
        t_prev = t_cur;
        t_cur = t_next;
        let u_next = &two_x * &u_cur - &u_prev;
        u_prev = u_cur;
        u_cur = u_next;
    }
    (t_cur, u_prev)
}

/// Exact check of T_n(x) = xⁿ θ₁((x²−1)/x²) and
/// U_{n−1}(x) = x^{n−1} θ₂((x²−1)/x²) at a rational x ≠ 0.
pub fn chebyshev_relation(n: u32, x: &Rat) -> Result<bool, Error> {
    if n == 0 {
        return Err(Error::Domain("n must be positive".into()));
    }
    if x.is_zero() {
        return Err(Error::Domain("x must be nonzero".into()));
    }
    let (t1, t2) = theta_pair(n);
    let (tn, un1) = chebyshev_t_u(n, x);
    let arg = (x * x - Rat::one()) / (x * x);
    let xn: Rat = Pow::pow(x, n as i32);
    let xn1: Rat = Pow::pow(x, n as i32 - 1);
    Ok(tn == xn * t1.eval(&arg) && un1 == xn1 * t2.eval(&arg))
}

/// Which expansion generates the covering polynomial G.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GSource {
    /// x^{k/2} F₃(k+1, ℓ+1; −k, −ℓ; 1+n/m | (√x+1)/(2√x), (1+√x)/2)
    F3Normalized,
    /// (1+√x)^{k+ℓ} F₂(−n/m−k−ℓ; −k, −ℓ; −2k, −2ℓ | 2√x/(1+√x), 2/(1+√x))
    F2Normalized,
}

fn check_klein_params(n: u32, m: u32) -> Result<(), Error> {
    if m < 2 {
        return Err(Error::Domain(format!("m = {m} must be at least 2")));
    }
    if n == 0 {
        return Err(Error::Domain("n must be positive".into()));
    }
    if num_integer::gcd(n, m) != 1 {
        return Err(Error::GcdViolation { n, m });
    }
    Ok(())
}

/// (−k)_i / (−2k)_i as an exact rational for 0 ≤ i ≤ k (1 when k = i = 0).
fn rect_ratio(k: u32, i: u32) -> Rat {
    let mut r = Rat::one();
    for t in 0..i as i64 {
        r *= rat(-(k as i64) + t, -(2 * k as i64) + t);
    }
    r
}

/// The covering polynomial G(√x), normalized to G(0) = 1, together with
/// the constant term of the literal expansion for the chosen source
/// (so literal = constant · returned polynomial).
///
/// Both sources produce proportional polynomials; the two constants differ
/// by the F₂↔F₃ reversal factor (a)_{k+ℓ}/(2^{k+ℓ}(1/2)_k(1/2)_ℓ) with
/// a = −n/m−k−ℓ.
pub fn klein_g(k: u32, l: u32, n: u32, m: u32, source: GSource) -> Result<(SqrtPoly, Rat), Error> {
    check_klein_params(n, m)?;
    let nm = rat(n as i64, m as i64);
    let kl = k + l;
    // coefficients in t = √x, degree k+ℓ
    let mut coeffs = vec![Rat::zero(); kl as usize + 1];
    match source {
        GSource::F3Normalized => {
            // Σ_{i≤k, j≤ℓ} (k+1)_i (ℓ+1)_j (−k)_i (−ℓ)_j / ((1+n/m)_{i+j} i! j!)
            //   · t^{k−i} (1+t)^{i+j} / 2^{i+j}
            let c = Rat::one() + &nm;
            for i in 0..=k {
                for j in 0..=l {
                    let num = pochhammer(&rat_i(k as i64 + 1), i)
                        * pochhammer(&rat_i(l as i64 + 1), j)
                        * pochhammer(&rat_i(-(k as i64)), i)
                        * pochhammer(&rat_i(-(l as i64)), j);
                    let den = pochhammer(&c, i + j)
                        * factorial(i)
                        * factorial(j)
                        * Pow::pow(&rat_i(2), (i + j) as i32);
                    let w = num / den;
                    for r in 0..=(i + j) as i64 {
                        coeffs[(k - i) as usize + r as usize] += &w * binomial(i + j, r);
                    }
                }
            }
        }
        GSource::F2Normalized => {
            // Σ_{i≤k, j≤ℓ} (a)_{i+j} [(−k)_i/(−2k)_i] [(−ℓ)_j/(−2ℓ)_j]
            //   · 2^{i+j}/(i! j!) · t^i (1+t)^{k+ℓ−i−j}
            let a = -&nm - rat_i(kl as i64);
            for i in 0..=k {
                for j in 0..=l {
                    let w = pochhammer(&a, i + j)
                        * rect_ratio(k, i)
                        * rect_ratio(l, j)
                        * Pow::pow(&rat_i(2), (i + j) as i32)
                        / (factorial(i) * factorial(j));
                    let rem = kl - i - j;
                    for r in 0..=rem as i64 {
                        coeffs[i as usize + r as usize] += &w * binomial(rem, r);
                    }
                }
            }
        }
    }
    let g = SqrtPoly::from_t_coeffs(&coeffs);
    let c0 = g.t_coeff(0);
    if c0.is_zero() {
        return Err(Error::StructureViolation(
            "covering polynomial has vanishing constant term".into(),
        ));
    }
    Ok((g.scale(&(Rat::one() / &c0)), c0))
}

/// A Klein pull-back covering: exact polynomials Θ₁, Θ₂, Ψ, the product
/// constant C, and the covering degree (k+ℓ)m + n. The rational map is
/// Φ(x) = x^{2k+1} Θ₂(x)²/Θ₁(x)².
#[derive(Debug, Clone, PartialEq)]
pub struct KleinCovering {
    pub k: u32,
    pub l: u32,
    pub n: u32,
    pub m: u32,
    pub theta1: RatPoly,
    pub theta2: RatPoly,
    pub psi: RatPoly,
    pub c_const: Rat,
    pub degree: u32,
}

impl KleinCovering {
    /// Φ(x) = x^{2k+1} Θ₂²/Θ₁² at a complex point.
    pub fn phi(&self, x: Cx) -> Cx {
        let t2 = self.theta2.eval_cx(x);
        let t1 = self.theta1.eval_cx(x);
        x.powu(2 * self.k + 1) * t2 * t2 / (t1 * t1)
    }

    /// Exact residual of Θ₁² − x^{2k+1} Θ₂² − C (1−x)ⁿ Ψ^m (zero when the
    /// covering is consistent).
    pub fn product_residual(&self) -> RatPoly {
        let d = self.theta1.mul(&self.theta1).sub(
            &self
                .theta2
                .mul(&self.theta2)
                .shift_up(2 * self.k as usize + 1),
        );
        let rhs = RatPoly::from_coeffs(vec![Rat::one(), -Rat::one()])
            .pow(self.n)
            .mul(&self.psi.pow(self.m))
            .scale(&self.c_const);
        d.sub(&rhs)
    }
}

/// The Ψ polynomial from its closed double-sum form:
///
/// Ψ(x) = (1/2)_{k+ℓ}(1/2)_k(1/2)_ℓ ((1−k−ℓ)/2 − n/(2m))_ℓ /
///        ((1+k−ℓ)/2 − n/(2m))_ℓ · (1−x)^{k+ℓ}
///        · F[2:1;1](n/m−k−ℓ; −n/m−k−ℓ; −k, −ℓ / 1/2−k−ℓ; −2k, −2ℓ
///                   | x/(x−1), 1/(1−x)),
///
/// expanded exactly: each term contributes (−1)^i x^i (1−x)^{k+ℓ−i−j}.
pub fn klein_psi_formula(k: u32, l: u32, n: u32, m: u32) -> Result<RatPoly, Error> {
    check_klein_params(n, m)?;
    let kl = k + l;
    let n2m = rat(n as i64, 2 * m as i64);
    let front = pochhammer(&rat(1, 2), kl)
        * pochhammer(&rat(1, 2), k)
        * pochhammer(&rat(1, 2), l)
        * pochhammer(&(rat(1 - kl as i64, 2) - &n2m), l)
        / pochhammer(&(rat(1 + k as i64 - l as i64, 2) - &n2m), l);
    let a = rat(n as i64, m as i64) - rat_i(kl as i64);
    let b = -rat(n as i64, m as i64) - rat_i(kl as i64);
    let c = rat(1 - 2 * kl as i64, 2);
    let one_minus_x = RatPoly::from_coeffs(vec![Rat::one(), -Rat::one()]);
    let mut psi = RatPoly::zero();
    for i in 0..=k {
        for j in 0..=l {
            let w =
                pochhammer(&a, i + j) * pochhammer(&b, i + j) * rect_ratio(k, i) * rect_ratio(l, j)
                    / (pochhammer(&c, i + j) * factorial(i) * factorial(j));
            let sign = if i % 2 == 0 { Rat::one() } else { -Rat::one() };
            let term = one_minus_x
                .pow(kl - i - j)
                .shift_up(i as usize)
                .scale(&(w * sign));
            psi = psi.add(&term);
        }
    }
    Ok(psi.scale(&front))
}

/// Build the covering for exponent differences (k+1/2, ℓ+1/2, n/m),
/// gcd(n, m) = 1, m ≥ 2.
///
/// G is normalized to G(0) = 1 before expanding (1+√x)ⁿ G^m, which fixes
/// Θ₁(0) = 1. The structural vanishing checks (odd coefficients of
/// x^{1/2}, …, x^{k−1/2}; top coefficients t^{N−1}, t^{N−3}, …,
/// t^{N+1−2ℓ} with N = n + m(k+ℓ)) are asserted, then Ψ and C are
/// extracted and the product relation is verified exactly.
pub fn klein_covering(k: u32, l: u32, n: u32, m: u32) -> Result<KleinCovering, Error> {
    let (g, _c0) = klein_g(k, l, n, m, GSource::F3Normalized)?;
    let s = SqrtPoly::one_plus_sqrt_pow(n, 1).mul(&g.pow(m));
    let big_n = n + m * (k + l);
    if s.t_degree() != Some(big_n as usize) {
        return Err(Error::StructureViolation(format!(
            "expansion degree {:?} differs from n + m(k+l) = {big_n}",
            s.t_degree()
        )));
    }
    // vanishing at the origin: coefficients of x^{1/2}, ..., x^{k-1/2}
    for i in 0..k {
        if !s.odd.coeff(i as usize).is_zero() {
            return Err(Error::StructureViolation(format!(
                "coefficient of x^{{{i}+1/2}} is nonzero"
            )));
        }
    }
    // vanishing at infinity: t-coefficients N-1, N-3, ..., N+1-2ℓ
    for j in 1..=l {
        let idx = big_n + 1 - 2 * j;
        if !s.t_coeff(idx as usize).is_zero() {
            return Err(Error::StructureViolation(format!(
                "t-coefficient {idx} below the top fails to vanish"
            )));
        }
    }
    let theta1 = s.even.clone();
    let theta2 = s.odd.shift_down(k as usize)?;
    if theta1.coeff(0).is_zero() {
        return Err(Error::StructureViolation("theta1(0) vanishes".into()));
    }
    let (psi, c_const) = extract_psi(k, l, n, m, &theta1, &theta2)?;
    Ok(KleinCovering {
        k,
        l,
        n,
        m,
        theta1,
        theta2,
        psi,
        c_const,
        degree: big_n,
    })
}

fn extract_psi(
    k: u32,
    l: u32,
    n: u32,
    m: u32,
    theta1: &RatPoly,
    theta2: &RatPoly,
) -> Result<(RatPoly, Rat), Error> {
    let d = theta1
        .mul(theta1)
        .sub(&theta2.mul(theta2).shift_up(2 * k as usize + 1));
    let quotient = d.div_exact(&RatPoly::from_coeffs(vec![Rat::one(), -Rat::one()]).pow(n))?;
    // m-th root of the normalized quotient, matched coefficient by
    // coefficient from the constant term
    let q0 = quotient.coeff(0);
    let root = quotient.scale(&(Rat::one() / &q0)).nth_root(m)?;
    // pin the normalization from the closed Ψ formula
    let psi = klein_psi_formula(k, l, n, m)?;
    let psi0 = psi.coeff(0);
    if psi0.is_zero() || psi != root.scale(&psi0) {
        return Err(Error::NotAPerfectPower(
            "extracted root is not proportional to the closed-form polynomial".into(),
        ));
    }
    let c_const = q0 / Pow::pow(&psi0, m as i32);
    let residual = d.sub(
        &RatPoly::from_coeffs(vec![Rat::one(), -Rat::one()])
            .pow(n)
            .mul(&psi.pow(m))
            .scale(&c_const),
    );
    if !residual.is_zero() {
        return Err(Error::NotAPerfectPower(
            "product relation residual nonzero".into(),
        ));
    }
    Ok((psi, c_const))
}

/// Recompute (Ψ, C) for a covering from its stored Θ polynomials.
pub fn klein_psi(cov: &KleinCovering) -> Result<(RatPoly, Rat), Error> {
    extract_psi(cov.k, cov.l, cov.n, cov.m, &cov.theta1, &cov.theta2)
}

/// The product constant C in Θ₁² − x^{2k+1}Θ₂² = C(1−x)ⁿΨ^m for the two
/// literal G normalizations, referred to the G(0) = 1 covering by
/// dividing out the surfaced constant:
///
/// - generating from x^{k/2}F₃: C = 4^{m(k+ℓ)} / (1+n/m)_{k+ℓ}^{2m},
/// - generating from (1+√x)^{k+ℓ}F₂: C = ((1/2)_k (1/2)_ℓ)^{−2m},
///
/// each then divided by (G-constant)^{2m}.
pub fn product_constant(k: u32, l: u32, n: u32, m: u32, source: GSource) -> Result<Rat, Error> {
    check_klein_params(n, m)?;
    let (_, c0) = klein_g(k, l, n, m, source)?;
    let raw = match source {
        GSource::F3Normalized => {
            let p = pochhammer(&(Rat::one() + rat(n as i64, m as i64)), k + l);
            Pow::pow(&rat_i(4), (m * (k + l)) as i32) / Pow::pow(&p, 2 * m as i32)
        }
        GSource::F2Normalized => {
            let p = pochhammer(&rat(1, 2), k) * pochhammer(&rat(1, 2), l);
            Rat::one() / Pow::pow(&p, 2 * m as i32)
        }
    };
    Ok(raw / Pow::pow(&c0, 2 * m as i32))
}

/// Numeric semi-invariant pair (W₁, W₂) of degree m at a point z ∈ (0, 1):
///
/// W₁ = (1/2)_k (1/2)_ℓ / ((1−k−ℓ)/2 − n/(2m))_ℓ · (1+√z)^{n/m+k+ℓ}
///      · F₂(−n/m−k−ℓ; −k, −ℓ; −2k, −2ℓ | 2√z/(1+√z), 2/(1+√z)),
///
/// and W₂ is its √z ↦ −√z conjugate. W₁^m + W₂^m is proportional to
/// Θ₁(z) and W₁^m − W₂^m to z^{k+1/2} Θ₂(z).
pub fn semi_invariants(cov: &KleinCovering, z: Cx) -> Result<(Cx, Cx), Error> {
    if !(z.im == 0.0 && z.re > 0.0 && z.re < 1.0) {
        return Err(Error::Domain(format!(
            "z = {z} must lie in the real interval (0, 1)"
        )));
    }
    let (k, l, n, m) = (cov.k, cov.l, cov.n, cov.m);
    let n2m = rat(n as i64, 2 * m as i64);
    let front = pochhammer(&rat(1, 2), k) * pochhammer(&rat(1, 2), l)
        / pochhammer(&(rat(1 - (k + l) as i64, 2) - &n2m), l);
    let a = -rat(n as i64, m as i64) - rat_i((k + l) as i64);
    let exp = rat(n as i64, m as i64) + rat_i((k + l) as i64);
    let one = Cx::new(1.0, 0.0);
    let w_at = |s: Cx| -> Cx {
        let f2 = appell_f2_rect(
            rat_to_cx(&a),
            k,
            l,
            2.0 * s / (one + s),
            2.0 * one / (one + s),
        );
        rat_to_cx(&front) * powc(one + s, rat_to_cx(&exp)) * f2.value
    };
    let s = z.sqrt();
    Ok((w_at(s), w_at(-s)))
}
