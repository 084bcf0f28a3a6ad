//! Exact polynomial arithmetic over the rationals, plus polynomials in √x
//! stored as an even/odd part pair.

use num_traits::{One, Signed, Zero};

use crate::scalar::{rat_to_cx, Cx, Rat};
use crate::Error;

/// Dense polynomial with exact rational coefficients, ascending order,
/// no trailing zeros (the zero polynomial has an empty coefficient list).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<Rat>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RatPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = RatPoly { coeffs: vec![c] };
        p.normalize();
        p
    }

    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        let mut p = RatPoly { coeffs };
        p.normalize();
        p
    }

    /// x^n with a rational coefficient.
    pub fn monomial(c: Rat, n: usize) -> Self {
        if c.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); n + 1];
        coeffs[n] = c;
        RatPoly { coeffs }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of x^n (zero beyond the degree).
    pub fn coeff(&self, n: usize) -> Rat {
        self.coeffs.get(n).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_cx(&self, x: Cx) -> Cx {
        let mut acc = Cx::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + rat_to_cx(c);
        }
        acc
    }

    pub fn add(&self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        RatPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        RatPoly::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> RatPoly {
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RatPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &Rat) -> RatPoly {
        RatPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut e: u32) -> RatPoly {
        let mut base = self.clone();
        let mut out = RatPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                out = out.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    /// Multiply by x^n.
    pub fn shift_up(&self, n: usize) -> RatPoly {
        if self.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        RatPoly { coeffs }
    }

    /// Divide by x^n, requiring the low-order coefficients to vanish.
    pub fn shift_down(&self, n: usize) -> Result<RatPoly, Error> {
        for i in 0..n.min(self.coeffs.len()) {
            if !self.coeffs[i].is_zero() {
                return Err(Error::NonDivisible(format!(
                    "coefficient of x^{i} is nonzero when dividing by x^{n}"
                )));
            }
        }
        if self.coeffs.len() <= n {
            return Ok(RatPoly::zero());
        }
        Ok(RatPoly {
            coeffs: self.coeffs[n..].to_vec(),
        })
    }

    /// Exact division; errors if a remainder is left.
    pub fn div_exact(&self, rhs: &RatPoly) -> Result<RatPoly, Error> {
        if rhs.is_zero() {
            return Err(Error::NonDivisible(
                "division by the zero polynomial".into(),
            ));
        }
        if self.is_zero() {
            return Ok(RatPoly::zero());
        }
        let (dn, dd) = (self.degree().unwrap(), rhs.degree().unwrap());
        if dn < dd {
            return Err(Error::NonDivisible(
                "degree of dividend below divisor".into(),
            ));
        }
        let mut rem = self.coeffs.clone();
        let mut q = vec![Rat::zero(); dn - dd + 1];
        let lead = rhs.coeffs[dd].clone();
        for i in (0..=dn - dd).rev() {
            let c = &rem[i + dd] / &lead;
            if !c.is_zero() {
                for (j, b) in rhs.coeffs.iter().enumerate() {
                    let t = &c * b;
                    rem[i + j] -= t;
                }
            }
            q[i] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NonDivisible(
                "polynomial division left a remainder".into(),
            ));
        }
        Ok(RatPoly::from_coeffs(q))
    }

    /// m-th root by coefficient matching from the constant term, which must
    /// be a rational m-th power. Errors with `NotAPerfectPower` otherwise.
    pub fn nth_root(&self, m: u32) -> Result<RatPoly, Error> {
        if m == 0 {
            return Err(Error::NotAPerfectPower("0th root".into()));
        }
        if m == 1 || self.is_zero() {
            return Ok(self.clone());
        }
        let deg = self.degree().unwrap();
        if !deg.is_multiple_of(m as usize) {
            return Err(Error::NotAPerfectPower(format!(
                "degree {deg} not divisible by {m}"
            )));
        }
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::NotAPerfectPower(
                "vanishing constant term; factor out x first".into(),
            ));
        }
        let r0 = rat_nth_root(c0, m).ok_or_else(|| {
            Error::NotAPerfectPower(format!("constant term {c0} is not a rational {m}-th power"))
        })?;
        let rdeg = deg / m as usize;
        let mut root = vec![Rat::zero(); rdeg + 1];
        root[0] = r0;
        // match coefficients of x^t in root^m against self
        for t in 1..=rdeg {
            let partial = RatPoly::from_coeffs(root[..t].to_vec()).pow(m);
            let delta = self.coeff(t) - partial.coeff(t);
            // d/d(root_t) of [root^m]_t = m * root_0^{m-1}
            let denom =
                Rat::from_integer(m.into()) * num_traits::pow::Pow::pow(&root[0], (m - 1) as i32);
            root[t] = delta / denom;
        }
        let candidate = RatPoly::from_coeffs(root);
        if candidate.pow(m) != *self {
            return Err(Error::NotAPerfectPower(
                "coefficient matching did not close".into(),
            ));
        }
        Ok(candidate)
    }
}

/// Rational m-th root of a rational number, if one exists. Even roots of
/// negatives do not.
fn rat_nth_root(x: &Rat, m: u32) -> Option<Rat> {
    if x.is_zero() {
        return Some(Rat::zero());
    }
    if x.is_negative() && m.is_multiple_of(2) {
        return None;
    }
    let num = x.numer().abs();
    let den = x.denom().clone();
    let rn = num.nth_root(m);
    let rd = den.nth_root(m);
    if num_traits::pow::Pow::pow(&rn, m) != num || num_traits::pow::Pow::pow(&rd, m) != den {
        return None;
    }
    let sign = if x.is_negative() { -1 } else { 1 };
    Some(Rat::new(rn * num_bigint::BigInt::from(sign), rd))
}

/// A polynomial in √x stored as E(x) + √x·O(x) with exact rational parts.
/// Multiplication respects (√x)² = x; conjugation negates the odd part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SqrtPoly {
    pub even: RatPoly,
    pub odd: RatPoly,
}

impl SqrtPoly {
    pub fn zero() -> Self {
        SqrtPoly {
            even: RatPoly::zero(),
            odd: RatPoly::zero(),
        }
    }

    pub fn one() -> Self {
        SqrtPoly {
            even: RatPoly::one(),
            odd: RatPoly::zero(),
        }
    }

    /// Build from coefficients in t = √x, ascending: c₀ + c₁t + c₂t² + …
    pub fn from_t_coeffs(coeffs: &[Rat]) -> Self {
        let even: Vec<Rat> = coeffs.iter().step_by(2).cloned().collect();
        let odd: Vec<Rat> = coeffs.iter().skip(1).step_by(2).cloned().collect();
        SqrtPoly {
            even: RatPoly::from_coeffs(even),
            odd: RatPoly::from_coeffs(odd),
        }
    }

    /// Coefficient of t^n (t = √x).
    pub fn t_coeff(&self, n: usize) -> Rat {
        if n.is_multiple_of(2) {
            self.even.coeff(n / 2)
        } else {
            self.odd.coeff(n / 2)
        }
    }

    /// Degree in t = √x.
    pub fn t_degree(&self) -> Option<usize> {
        let de = self.even.degree().map(|d| 2 * d);
        let do_ = self.odd.degree().map(|d| 2 * d + 1);
        match (de, do_) {
            (None, None) => None,
            (a, b) => a.max(b),
        }
    }

    /// (1 + ε√x)^n expanded exactly, ε = ±1.
    pub fn one_plus_sqrt_pow(n: u32, sign: i64) -> Self {
        let mut coeffs = Vec::with_capacity(n as usize + 1);
        for r in 0..=n {
            let mut c = crate::scalar::binomial(n, r as i64);
            if sign < 0 && r % 2 == 1 {
                c = -c;
            }
            coeffs.push(c);
        }
        SqrtPoly::from_t_coeffs(&coeffs)
    }

    pub fn add(&self, rhs: &SqrtPoly) -> SqrtPoly {
        SqrtPoly {
            even: self.even.add(&rhs.even),
            odd: self.odd.add(&rhs.odd),
        }
    }

    pub fn sub(&self, rhs: &SqrtPoly) -> SqrtPoly {
        SqrtPoly {
            even: self.even.sub(&rhs.even),
            odd: self.odd.sub(&rhs.odd),
        }
    }

    /// (E₁ + √x O₁)(E₂ + √x O₂) = (E₁E₂ + x O₁O₂) + √x (E₁O₂ + O₁E₂).
    pub fn mul(&self, rhs: &SqrtPoly) -> SqrtPoly {
        let even = self
            .even
            .mul(&rhs.even)
            .add(&self.odd.mul(&rhs.odd).shift_up(1));
        let odd = self.even.mul(&rhs.odd).add(&self.odd.mul(&rhs.even));
        SqrtPoly { even, odd }
    }

    pub fn scale(&self, c: &Rat) -> SqrtPoly {
        SqrtPoly {
            even: self.even.scale(c),
            odd: self.odd.scale(c),
        }
    }

    pub fn pow(&self, mut e: u32) -> SqrtPoly {
        let mut base = self.clone();
        let mut out = SqrtPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                out = out.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    /// √x ↦ −√x.
    pub fn conjugate(&self) -> SqrtPoly {
        SqrtPoly {
            even: self.even.clone(),
            odd: self.odd.neg(),
        }
    }

    /// Evaluate at x given a value of √x (caller fixes the branch).
    pub fn eval_with_sqrt(&self, sqrt_x: Cx) -> Cx {
        let x = sqrt_x * sqrt_x;
        self.even.eval_cx(x) + sqrt_x * self.odd.eval_cx(x)
    }

    pub fn eval_rat_sqrt(&self, sqrt_x: &Rat) -> Rat {
        let x = sqrt_x * sqrt_x;
        self.even.eval(&x) + sqrt_x * self.odd.eval(&x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_i};

    fn poly(cs: &[i64]) -> RatPoly {
        RatPoly::from_coeffs(cs.iter().map(|&c| rat_i(c)).collect())
    }

    #[test]
    fn arithmetic_and_normalization() {
        let p = poly(&[1, 2, 1]); // (1+x)^2
        let q = poly(&[1, 1]);
        assert_eq!(q.mul(&q), p);
        assert_eq!(p.sub(&p), RatPoly::zero());
        assert_eq!(p.degree(), Some(2));
        assert_eq!(RatPoly::zero().degree(), None);
        assert_eq!(p.div_exact(&q).unwrap(), q);
        assert!(poly(&[1, 1, 1]).div_exact(&q).is_err());
    }

    #[test]
    fn eval_matches_horner() {
        let p = RatPoly::from_coeffs(vec![rat(1, 2), rat(-3, 4), rat_i(2)]);
        let x = rat(2, 3);
        let direct = rat(1, 2) + rat(-3, 4) * &x + rat_i(2) * &x * &x;
        assert_eq!(p.eval(&x), direct);
    }

    #[test]
    fn nth_root_round_trip() {
        let base = RatPoly::from_coeffs(vec![rat(9, 4), rat(-1, 3), rat_i(5), rat(7, 2)]);
        for m in 2..=5u32 {
            let p = base.pow(m);
            let r = p.nth_root(m).unwrap();
            // root extraction normalizes to the positive constant term
            let want = if base.coeff(0).is_negative() && m % 2 == 0 {
                base.neg()
            } else {
                base.clone()
            };
            assert_eq!(r, want, "m={m}");
        }
        assert!(poly(&[1, 1]).nth_root(2).is_err());
        // constant term not a perfect power
        assert!(poly(&[2, 2, 2]).nth_root(2).is_err());
    }

    #[test]
    fn sqrt_poly_mul_and_conjugate() {
        // (1 + √x)(1 − √x) = 1 − x
        let p = SqrtPoly::one_plus_sqrt_pow(1, 1);
        let q = p.conjugate();
        let prod = p.mul(&q);
        assert_eq!(prod.even, poly(&[1, -1]));
        assert!(prod.odd.is_zero());
        // (1 + √x)^2 = (1 + x) + 2√x
        let sq = p.pow(2);
        assert_eq!(sq.even, poly(&[1, 1]));
        assert_eq!(sq.odd, poly(&[2]));
        assert_eq!(sq.t_degree(), Some(2));
    }

    #[test]
    fn sqrt_poly_eval() {
        let p = SqrtPoly::one_plus_sqrt_pow(3, -1); // (1 − √x)^3
        let s = rat(1, 2);
        let v = p.eval_rat_sqrt(&s);
        assert_eq!(v, rat(1, 8));
    }
}
