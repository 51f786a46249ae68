//! Self-similar iterated root approximants
//! `scale * (((1 + A1 x)^2 + A2 x^2)^(3/2) + ... + Ak x^k)^(beta/k)`.

use crate::error::{Error, Result};
use crate::transforms::TransformedSeries;

#[derive(Debug, Clone, PartialEq)]
pub struct IteratedRootApproximant {
    /// A_1..A_k.
    pub a: Vec<f64>,
    pub beta: f64,
    /// The b_0 prefactor.
    pub scale: f64,
}

/// Leading coefficient C_k of the approximant's x^beta behaviour.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MarginalAmplitude {
    pub value: f64,
}

impl IteratedRootApproximant {
    pub fn k(&self) -> usize {
        self.a.len()
    }

    /// Taylor coefficients through `order`, scale included.
    pub fn taylor(&self, order: usize) -> Result<Vec<f64>> {
        Ok(normalized_taylor(&self.a, self.beta, order)?.into_iter().map(|c| c * self.scale).collect())
    }
}

/// Taylor expansion of the unit-scale approximant with parameters `a`.
/// Every level has value 1 at x = 0, so the power recurrence is always well defined.
fn normalized_taylor(a: &[f64], beta: f64, order: usize) -> Result<Vec<f64>> {
    let a: Vec<Dd> = a.iter().map(|&x| Dd::from(x)).collect();
    Ok(normalized_taylor_dd(&a, Dd::from(beta), order).into_iter().map(Dd::to_f64).collect())
}

// The coefficients of the levels grow like powers of the A_j while the fitted b_n may decay
// fast, so the recurrences cancel over many digits. They run in double-double arithmetic.
fn normalized_taylor_dd(a: &[Dd], beta: Dd, order: usize) -> Vec<Dd> {
    let k = a.len();
    let mut p = vec![Dd::ZERO; order + 1];
    p[0] = Dd::ONE;
    if k == 0 {
        return p;
    }
    if order >= 1 {
        p[1] = a[0];
    }
    for j in 1..k {
        p = unit_pow(&p, Dd::from((j + 1) as f64) / Dd::from(j as f64), order);
        if j < order {
            p[j + 1] = p[j + 1] + a[j];
        }
    }
    unit_pow(&p, beta / Dd::from(k as f64), order)
}

/// f^p for a series with f_0 = 1.
fn unit_pow(f: &[Dd], p: Dd, order: usize) -> Vec<Dd> {
    let mut g = Vec::with_capacity(order + 1);
    g.push(Dd::ONE);
    for n in 1..=order {
        let mut s = Dd::ZERO;
        for m in 1..=n.min(f.len() - 1) {
            let c = p * Dd::from(m as f64) - Dd::from((n - m) as f64);
            s = s + c * f[m] * g[n - m];
        }
        g.push(s / Dd::from(n as f64));
    }
    g
}

/// Accuracy-through-order fit of A_1..A_k to b_n / b_0.
///
/// With A_{j+1..k} = 0 the k-level root collapses to the j-level one, so A_j is fixed by the
/// order-j coefficient of a j-level root, which is affine in A_j with slope beta / j.
pub fn fit_iterated_root(t: &TransformedSeries, beta: f64) -> Result<IteratedRootApproximant> {
    fit_coefficients(&t.b, beta)
}

pub(crate) fn fit_coefficients(b: &[f64], beta: f64) -> Result<IteratedRootApproximant> {
    let b0 = b[0];
    if b0 == 0.0 {
        return Err(Error::ZeroLeadingCoefficient);
    }
    let k = b.len() - 1;
    let beta_dd = Dd::from(beta);
    let mut a: Vec<Dd> = Vec::with_capacity(k);
    for j in 1..=k {
        let target = Dd::from(b[j]) / Dd::from(b0);
        a.push(Dd::ZERO);
        let c0 = normalized_taylor_dd(&a, beta_dd, j)[j];
        // A_j enters the order-j coefficient only through P_j^(beta/j), with unit P_j(0)
        let slope = beta_dd / Dd::from(j as f64);
        let miss = target - c0;
        if slope.to_f64().abs() < 1e-14 {
            // beta = 0: any A_j fits an order that already matches
            if miss.to_f64().abs() <= 1e-14 * target.to_f64().abs().max(1.0) {
                a[j - 1] = Dd::ZERO;
                continue;
            }
            return Err(Error::DegenerateOrder(j));
        }
        let aj = miss / slope;
        if !aj.to_f64().is_finite() {
            return Err(Error::Overflow(aj.to_f64()));
        }
        // later levels see the value that is actually stored
        a[j - 1] = Dd::from(aj.to_f64());
    }
    Ok(IteratedRootApproximant { a: a.into_iter().map(Dd::to_f64).collect(), beta, scale: b0 })
}

/// Unevaluated sum hi + lo with |lo| <= ulp(hi) / 2.
#[derive(Debug, Clone, Copy, PartialEq)]
struct Dd {
    hi: f64,
    lo: f64,
}

impl Dd {
    const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    fn fast_two_sum(a: f64, b: f64) -> Dd {
        let s = a + b;
        Dd { hi: s, lo: b - (s - a) }
    }

    fn two_sum(a: f64, b: f64) -> Dd {
        let s = a + b;
        let bb = s - a;
        Dd { hi: s, lo: (a - (s - bb)) + (b - bb) }
    }
}

impl From<f64> for Dd {
    fn from(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }
}

impl std::ops::Add for Dd {
    type Output = Dd;
    fn add(self, o: Dd) -> Dd {
        let s = Dd::two_sum(self.hi, o.hi);
        let t = Dd::two_sum(self.lo, o.lo);
        let r = Dd::fast_two_sum(s.hi, s.lo + t.hi);
        Dd::fast_two_sum(r.hi, r.lo + t.lo)
    }
}

impl std::ops::Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }
}

impl std::ops::Sub for Dd {
    type Output = Dd;
    fn sub(self, o: Dd) -> Dd {
        self + -o
    }
}

impl std::ops::Mul for Dd {
    type Output = Dd;
    fn mul(self, o: Dd) -> Dd {
        let p = self.hi * o.hi;
        let e = self.hi.mul_add(o.hi, -p) + (self.hi * o.lo + self.lo * o.hi);
        Dd::fast_two_sum(p, e)
    }
}

impl std::ops::Div for Dd {
    type Output = Dd;
    fn div(self, o: Dd) -> Dd {
        let q1 = self.hi / o.hi;
        let r = self - o * Dd::from(q1);
        let q2 = r.hi / o.hi;
        let r = r - o * Dd::from(q2);
        let q3 = r.hi / o.hi;
        let q = Dd::fast_two_sum(q1, q2);
        q + Dd::from(q3)
    }
}

fn checked_pow(base: f64, e: f64) -> Result<f64> {
    if e.fract() == 0.0 && e.abs() < i32::MAX as f64 {
        Ok(base.powi(e as i32))
    } else if base > 0.0 {
        Ok(base.powf(e))
    } else {
        Err(Error::ComplexValue)
    }
}

pub fn evaluate_root(r: &IteratedRootApproximant, x: f64) -> Result<f64> {
    let k = r.k();
    if k == 0 {
        return Ok(r.scale);
    }
    let mut p = 1.0 + r.a[0] * x;
    for j in 1..k {
        p = checked_pow(p, (j + 1) as f64 / j as f64)? + r.a[j] * x.powi(j as i32 + 1);
    }
    Ok(r.scale * checked_pow(p, r.beta / k as f64)?)
}

/// C_k = scale * P_k^(beta/k) with P_1 = A_1, P_{j+1} = P_j^((j+1)/j) + A_{j+1}.
pub fn marginal_amplitude(r: &IteratedRootApproximant) -> Result<MarginalAmplitude> {
    let k = r.k();
    if k == 0 {
        return Ok(MarginalAmplitude { value: r.scale });
    }
    let mut p = r.a[0];
    for j in 1..k {
        p = checked_pow(p, (j + 1) as f64 / j as f64)? + r.a[j];
    }
    let value = r.scale * checked_pow(p, r.beta / k as f64)?;
    if value.is_finite() {
        Ok(MarginalAmplitude { value })
    } else {
        Err(Error::ComplexValue)
    }
}
