//! Value distributions and the virtual-value calculus.
//!
//! Seven families cover the whole lab: `Exponential` (the canonical MHR
//! case), `PowerTailAlpha` (the canonical α-strongly-regular case),
//! `EqualRevenue` and `UltraExponential` (heavy tails with identically-zero
//! or nearly-flat virtual values), `DiscreteTwoPoint` (exact enumeration),
//! plus `Truncated` and `Discretized` wrappers. All families are regular, so
//! ironing is the identity and is deliberately not implemented; operations
//! that need a regularity certificate reject anything else.

use crate::error::{Error, Result};
use crate::quad;
use crate::rng::{self, StreamDomain};
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Iteration cap for the tetration / iterated-log recurrences. Desk-scale
/// inputs exhaust f64 range long before this depth.
const SUPERLOG_DEPTH: usize = 64;

/// Absolute tolerance for bisection inverses.
const BISECT_TOL: f64 = 1e-12;

/// Distribution family of a bidder's value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum Family {
    /// Rate-λ exponential on [0, ∞); memoryless, hence constant hazard.
    Exponential { rate: f64 },
    /// CDF 1 − v^(−1/(1−α)) on [1, ∞); virtual value αv.
    PowerTailAlpha { alpha: f64 },
    /// CDF 1 − 1/v on [1, ∞); every posted price earns exactly 1.
    EqualRevenue,
    /// Tail Pr[v ≥ x] = 1/(x · ln x · ln ln x ⋯) on [1, ∞); infinite mean.
    UltraExponential,
    /// Values {1, 2} with probability ½ each.
    DiscreteTwoPoint,
    /// Base distribution with all mass above `cap` moved onto `cap`.
    Truncated { base: Box<Distribution>, cap: f64 },
    /// Base distribution with the mass of [iε, (i+1)ε) placed at iε.
    Discretized { base: Box<Distribution>, step: f64 },
}

/// An immutable value distribution.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Distribution {
    family: Family,
}

impl Distribution {
    /// Exponential with the given rate.
    pub fn exponential(rate: f64) -> Result<Self> {
        if !(rate > 0.0 && rate.is_finite()) {
            return Err(Error::BadParam(format!("exponential rate {rate}")));
        }
        Ok(Self { family: Family::Exponential { rate } })
    }

    /// Power-tail family with strong-regularity parameter α ∈ (0, 1).
    pub fn power_tail(alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(Error::BadParam(format!("power-tail alpha {alpha}")));
        }
        Ok(Self { family: Family::PowerTailAlpha { alpha } })
    }

    /// Equal-revenue distribution.
    pub fn equal_revenue() -> Self {
        Self { family: Family::EqualRevenue }
    }

    /// Ultra-exponential (iterated-log tail) distribution.
    pub fn ultra_exponential() -> Self {
        Self { family: Family::UltraExponential }
    }

    /// Uniform two-point distribution on {1, 2}.
    pub fn two_point() -> Self {
        Self { family: Family::DiscreteTwoPoint }
    }

    /// Move all mass above `cap` onto the atom `cap`.
    pub fn truncated(base: Distribution, cap: f64) -> Result<Self> {
        if !(cap > base.support_lo() && cap.is_finite()) {
            return Err(Error::BadParam(format!("truncation cap {cap}")));
        }
        Ok(Self { family: Family::Truncated { base: Box::new(base), cap } })
    }

    /// Round values down onto the grid {0, ε, 2ε, …}.
    pub fn discretized(base: Distribution, step: f64) -> Result<Self> {
        if !(step > 0.0 && step.is_finite()) {
            return Err(Error::BadParam(format!("discretization step {step}")));
        }
        Ok(Self { family: Family::Discretized { base: Box::new(base), step } })
    }

    /// The family tag.
    pub fn family(&self) -> &Family {
        &self.family
    }

    /// Lowest value in the support.
    pub fn support_lo(&self) -> f64 {
        match &self.family {
            Family::Exponential { .. } => 0.0,
            Family::PowerTailAlpha { .. }
            | Family::EqualRevenue
            | Family::UltraExponential
            | Family::DiscreteTwoPoint => 1.0,
            Family::Truncated { base, .. } => base.support_lo(),
            Family::Discretized { base, step } => (base.support_lo() / step).floor() * step,
        }
    }

    /// Highest value in the support (`f64::INFINITY` when unbounded).
    pub fn support_hi(&self) -> f64 {
        match &self.family {
            Family::Exponential { .. }
            | Family::PowerTailAlpha { .. }
            | Family::EqualRevenue
            | Family::UltraExponential => f64::INFINITY,
            Family::DiscreteTwoPoint => 2.0,
            Family::Truncated { base, cap } => base.support_hi().min(*cap),
            Family::Discretized { base, step } => {
                let hi = base.support_hi();
                if hi.is_finite() { (hi / step).floor() * step } else { hi }
            }
        }
    }

    /// Right-continuous CDF, Pr[X ≤ v].
    pub fn cdf(&self, v: f64) -> f64 {
        match &self.family {
            Family::Exponential { rate } => {
                if v <= 0.0 { 0.0 } else { -(-rate * v).exp_m1() }
            }
            Family::PowerTailAlpha { alpha } => {
                if v <= 1.0 { 0.0 } else { 1.0 - v.powf(-1.0 / (1.0 - alpha)) }
            }
            Family::EqualRevenue => {
                if v <= 1.0 { 0.0 } else { 1.0 - 1.0 / v }
            }
            Family::UltraExponential => {
                if v <= 1.0 { 0.0 } else { 1.0 - ultra_tail(v) }
            }
            Family::DiscreteTwoPoint => {
                if v < 1.0 { 0.0 } else if v < 2.0 { 0.5 } else { 1.0 }
            }
            Family::Truncated { base, cap } => {
                if v >= *cap { 1.0 } else { base.cdf(v) }
            }
            Family::Discretized { base, step } => {
                if v < self.support_lo() {
                    0.0
                } else {
                    // X_ε ≤ v  ⇔  X < (⌊v/ε⌋+1)·ε
                    1.0 - base.tail((v / step).floor() * step + *step)
                }
            }
        }
    }

    /// Upper tail Pr[X ≥ v] (left limit of the CDF complement, so atoms at v
    /// count toward the tail).
    pub fn tail(&self, v: f64) -> f64 {
        match &self.family {
            Family::Exponential { rate } => {
                if v <= 0.0 { 1.0 } else { (-rate * v).exp() }
            }
            Family::PowerTailAlpha { alpha } => {
                if v <= 1.0 { 1.0 } else { v.powf(-1.0 / (1.0 - alpha)) }
            }
            Family::EqualRevenue => {
                if v <= 1.0 { 1.0 } else { 1.0 / v }
            }
            Family::UltraExponential => ultra_tail(v),
            Family::DiscreteTwoPoint => {
                if v <= 1.0 { 1.0 } else if v <= 2.0 { 0.5 } else { 0.0 }
            }
            Family::Truncated { base, cap } => {
                if v > *cap { 0.0 } else { base.tail(v) }
            }
            Family::Discretized { base, step } => {
                // X_ε ≥ v  ⇔  X ≥ ε·⌈v/ε⌉
                base.tail((v / step).ceil() * step)
            }
        }
    }

    /// Density for continuous families; point mass for atoms.
    pub fn pdf(&self, v: f64) -> f64 {
        match &self.family {
            Family::Exponential { rate } => {
                if v < 0.0 { 0.0 } else { rate * (-rate * v).exp() }
            }
            Family::PowerTailAlpha { alpha } => {
                if v < 1.0 {
                    0.0
                } else {
                    let inv = 1.0 / (1.0 - alpha);
                    inv * v.powf(-(inv + 1.0))
                }
            }
            Family::EqualRevenue => {
                if v < 1.0 { 0.0 } else { 1.0 / (v * v) }
            }
            Family::UltraExponential => {
                if v < 1.0 { 0.0 } else { ultra_tail(v) * ultra_hazard(v) }
            }
            Family::DiscreteTwoPoint => {
                if v == 1.0 || v == 2.0 { 0.5 } else { 0.0 }
            }
            Family::Truncated { base, cap } => {
                if v > *cap {
                    0.0
                } else if v == *cap {
                    base.tail(*cap)
                } else {
                    base.pdf(v)
                }
            }
            Family::Discretized { base, step } => {
                if (v / step).fract() != 0.0 {
                    0.0
                } else {
                    base.tail(v) - base.tail(v + *step)
                }
            }
        }
    }

    /// Generalized inverse CDF: inf{x : F(x) ≥ u}, for u ∈ [0, 1).
    pub fn quantile(&self, u: f64) -> f64 {
        debug_assert!((0.0..1.0).contains(&u));
        match &self.family {
            Family::Exponential { rate } => -(-u).ln_1p() / rate,
            Family::PowerTailAlpha { alpha } => (1.0 - u).powf(-(1.0 - alpha)),
            Family::EqualRevenue => 1.0 / (1.0 - u),
            Family::UltraExponential => {
                if u <= 0.0 {
                    1.0
                } else {
                    // Solve tail(x) = 1−u for the decreasing iterated-log tail.
                    invert_decreasing(|x| ultra_tail(x), 1.0 - u, 1.0)
                }
            }
            Family::DiscreteTwoPoint => {
                if u < 0.5 { 1.0 } else { 2.0 }
            }
            Family::Truncated { base, cap } => base.quantile(u).min(*cap),
            Family::Discretized { base, step } => (base.quantile(u) / step).floor() * step,
        }
    }

    /// Draw one value via quantile inversion of a uniform in [0, 1).
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        self.quantile(rng.gen::<f64>())
    }

    /// Strong-regularity certificate: `Some(α)` when the virtual value grows
    /// at slope ≥ α, `None` when the family carries no certificate.
    pub fn alpha_strong(&self) -> Option<f64> {
        match &self.family {
            Family::Exponential { .. } => Some(1.0),
            Family::PowerTailAlpha { alpha } => Some(*alpha),
            Family::EqualRevenue => Some(0.0),
            Family::UltraExponential => Some(0.0),
            Family::DiscreteTwoPoint => Some(1.0),
            Family::Truncated { base, .. } => base.alpha_strong(),
            Family::Discretized { .. } => None,
        }
    }

    /// Whether the family is MHR (1-strongly regular).
    pub fn is_mhr(&self) -> bool {
        self.alpha_strong() == Some(1.0)
    }

    /// Hazard rate f(v)/(1 − F(v)).
    pub fn hazard_rate(&self, v: f64) -> Result<f64> {
        let t = self.tail(v.max(self.support_lo()));
        if t <= 0.0 {
            return Err(Error::TailExhausted);
        }
        match &self.family {
            Family::Exponential { rate } => Ok(*rate),
            Family::PowerTailAlpha { alpha } => {
                Ok(1.0 / ((1.0 - alpha) * v.max(1.0)))
            }
            Family::EqualRevenue => Ok(1.0 / v.max(1.0)),
            Family::UltraExponential => Ok(ultra_hazard(v.max(1.0))),
            Family::DiscreteTwoPoint | Family::Discretized { .. } => {
                // Discrete convention: mass at the atom over the inclusive tail.
                Ok(self.pdf(v) / t)
            }
            Family::Truncated { base, cap } => {
                if v >= *cap {
                    Err(Error::TailExhausted)
                } else {
                    base.hazard_rate(v)
                }
            }
        }
    }

    /// Myerson virtual value ϕ(v) = v − (1 − F(v))/f(v); for atoms, the
    /// discrete analogue v − (gap to next atom)·Pr[X > v]/Pr[X = v].
    pub fn virtual_value(&self, v: f64) -> Result<f64> {
        if v < self.support_lo() || v > self.support_hi() {
            return Err(Error::OutOfSupport(v));
        }
        match &self.family {
            Family::Exponential { rate } => Ok(v - 1.0 / rate),
            Family::PowerTailAlpha { alpha } => Ok(alpha * v),
            Family::EqualRevenue => Ok(0.0),
            Family::UltraExponential => {
                if v <= 1.0 {
                    Ok(0.0)
                } else {
                    Ok(v - 1.0 / ultra_hazard(v))
                }
            }
            Family::DiscreteTwoPoint => {
                if v == 1.0 {
                    Ok(0.0) // 1 − (2−1)·Pr[X=2]/Pr[X=1]
                } else if v == 2.0 {
                    Ok(2.0) // top atom has empty upper tail
                } else {
                    Err(Error::OutOfSupport(v))
                }
            }
            Family::Truncated { base, cap } => {
                if v >= *cap { Ok(*cap) } else { base.virtual_value(v) }
            }
            Family::Discretized { .. } => Err(Error::NonRegular),
        }
    }

    /// Generalized inverse of the virtual value: inf{x in support : ϕ(x) ≥ y},
    /// `f64::INFINITY` when no such point exists.
    pub fn inverse_virtual_value(&self, y: f64) -> Result<f64> {
        let lo = self.support_lo();
        match &self.family {
            Family::Exponential { rate } => Ok((y + 1.0 / rate).max(lo)),
            Family::PowerTailAlpha { alpha } => Ok((y / alpha).max(1.0)),
            Family::EqualRevenue => {
                Ok(if y <= 0.0 { 1.0 } else { f64::INFINITY })
            }
            Family::UltraExponential => {
                if y <= 0.0 {
                    Ok(1.0)
                } else {
                    Ok(invert_nondecreasing(
                        |x| self.virtual_value(x).unwrap_or(f64::NEG_INFINITY),
                        y,
                        1.0,
                    ))
                }
            }
            Family::DiscreteTwoPoint => Ok(if y <= 0.0 {
                1.0
            } else if y <= 2.0 {
                2.0
            } else {
                f64::INFINITY
            }),
            Family::Truncated { base, cap } => {
                let x = base.inverse_virtual_value(y)?;
                if x < *cap {
                    Ok(x)
                } else if y <= *cap {
                    Ok(*cap)
                } else {
                    Ok(f64::INFINITY)
                }
            }
            Family::Discretized { .. } => Err(Error::NonRegular),
        }
    }

    /// Myerson reserve r(D): the smallest support point with ϕ ≥ 0.
    pub fn reserve(&self) -> Result<f64> {
        match &self.family {
            Family::Exponential { rate } => Ok(1.0 / rate),
            Family::PowerTailAlpha { .. }
            | Family::EqualRevenue
            | Family::UltraExponential
            | Family::DiscreteTwoPoint => Ok(1.0),
            Family::Truncated { base, cap } => Ok(base.reserve()?.min(*cap)),
            Family::Discretized { .. } => Err(Error::NonRegular),
        }
    }

    /// Expected value; `InfiniteMean` for the heavy-tail families.
    pub fn mean(&self) -> Result<f64> {
        match &self.family {
            Family::Exponential { rate } => Ok(1.0 / rate),
            Family::PowerTailAlpha { alpha } => Ok(1.0 / alpha),
            Family::EqualRevenue | Family::UltraExponential => Err(Error::InfiniteMean),
            Family::DiscreteTwoPoint => Ok(1.5),
            Family::Truncated { base, cap } => {
                // E[min(X, cap)] = ∫_0^cap Pr[X ≥ t] dt for nonnegative X.
                Ok(quad::integrate(&|t| base.tail(t), 0.0, *cap, 1e-10))
            }
            Family::Discretized { base, step } => {
                if base.mean().is_err() {
                    return Err(Error::InfiniteMean);
                }
                // E[X_ε] = ε · Σ_{m≥1} Pr[X ≥ mε].
                let mut total = 0.0;
                let mut m = 1u64;
                loop {
                    let t = base.tail(m as f64 * step);
                    total += t;
                    if t < 1e-14 || m > 100_000_000 {
                        break;
                    }
                    m += 1;
                }
                Ok(total * step)
            }
        }
    }

    /// Whether exhaustive enumeration over the support is possible.
    pub fn is_discrete(&self) -> bool {
        matches!(
            self.family,
            Family::DiscreteTwoPoint | Family::Discretized { .. }
        )
    }

    /// Atoms and probabilities for discrete families.
    pub fn atoms(&self) -> Result<Vec<(f64, f64)>> {
        match &self.family {
            Family::DiscreteTwoPoint => Ok(vec![(1.0, 0.5), (2.0, 0.5)]),
            _ => Err(Error::PreconditionViolated(
                "atoms only enumerable for discrete families".into(),
            )),
        }
    }
}

// ---------------------------------------------------------------------------
// Iterated-log machinery for the ultra-exponential family.
// ---------------------------------------------------------------------------

/// Tetration extension h: h(s) = 1 + s on (−1, 0], h(s) = e^{h(s−1)} above.
pub fn tetration(s: f64) -> Result<f64> {
    if !(s > -1.0) || s.is_nan() {
        return Err(Error::BadParam(format!("tetration argument {s}")));
    }
    let k = (s.ceil() as i64).clamp(0, SUPERLOG_DEPTH as i64);
    let mut v = 1.0 + (s - s.ceil().min(SUPERLOG_DEPTH as f64));
    for _ in 0..k {
        v = v.exp(); // saturates to +inf past f64 range, which is fine
    }
    Ok(v)
}

/// Iterated-log inverse ln*: superlog(x) = x − 1 on (0, 1], and
/// 1 + superlog(ln x) above.
pub fn superlog(x: f64) -> Result<f64> {
    if !(x > 0.0) || x.is_nan() {
        return Err(Error::BadParam(format!("superlog argument {x}")));
    }
    let mut x = x;
    let mut count = 0.0;
    for _ in 0..SUPERLOG_DEPTH {
        if x <= 1.0 {
            break;
        }
        x = x.ln();
        count += 1.0;
    }
    Ok(count + (x - 1.0))
}

/// Pr[X ≥ x] for the ultra-exponential family: the product of reciprocals of
/// the iterated logarithms of x while they remain above 1.
fn ultra_tail(x: f64) -> f64 {
    if x <= 1.0 {
        return 1.0;
    }
    let mut t = 1.0;
    let mut l = x;
    for _ in 0..SUPERLOG_DEPTH {
        if l <= 1.0 {
            break;
        }
        t /= l;
        l = l.ln();
    }
    t
}

/// Hazard rate of the ultra-exponential family:
/// Σ_j 1/(L_0 L_1 ⋯ L_j) over the iterated logarithms L_0 = x, L_{j+1} = ln L_j.
fn ultra_hazard(x: f64) -> f64 {
    if x <= 1.0 {
        return 1.0; // right limit at the support edge
    }
    let mut sum = 0.0;
    let mut prod = 1.0;
    let mut l = x;
    for _ in 0..SUPERLOG_DEPTH {
        if l <= 1.0 {
            break;
        }
        prod *= l;
        sum += 1.0 / prod;
        l = l.ln();
    }
    sum
}

/// ln(x · Pr[X ≥ x]) for an ultra-exponential point given in superlog
/// coordinates s = ln*(x). Stays finite long after x itself overflows:
/// ln(x·T(x)) = −Σ_{j≥1} ln L_j(x) and ln L_j(x) = h(s − j − 1)… applied via
/// the identity ln h(y) = h(y − 1).
pub fn ultra_ln_price_mass(s: f64) -> Result<f64> {
    if !(s >= 0.0) {
        return Err(Error::BadParam(format!("superlog coordinate {s}")));
    }
    let mut ln_sum = 0.0;
    let mut j = 1.0;
    while s - j > 0.0 {
        // ln L_j(x) = h(s − j − 1); saturates to +inf harmlessly.
        ln_sum += tetration(s - j - 1.0)?;
        j += 1.0;
    }
    // Last iterate sits in (0, 1]; its log contribution is ≤ 0 via h(s−j)−…
    if s - j > -1.0 {
        // L_j(x) = h(s − j) ∈ (0, 1]; ln of it is negative but the tail
        // product only divides by iterates above 1, so stop here.
    }
    Ok(-ln_sum)
}

/// x · Pr[X ≥ x] for an ultra-exponential point in superlog coordinates.
pub fn ultra_price_mass(s: f64) -> Result<f64> {
    Ok(ultra_ln_price_mass(s)?.exp())
}

// ---------------------------------------------------------------------------
// Bisection inverses.
// ---------------------------------------------------------------------------

/// Smallest x ≥ lo with nondecreasing g(x) ≥ y (generalized inverse).
fn invert_nondecreasing<F: Fn(f64) -> f64>(g: F, y: f64, lo: f64) -> f64 {
    if g(lo) >= y {
        return lo;
    }
    let mut a = lo;
    let mut b = lo.abs().max(1.0);
    let mut grew = 0;
    while g(b) < y {
        a = b;
        b *= 2.0;
        grew += 1;
        if grew > 1100 {
            return f64::INFINITY;
        }
    }
    while b - a > BISECT_TOL && b - a > f64::EPSILON * b.abs() {
        let m = 0.5 * (a + b);
        if g(m) >= y {
            b = m;
        } else {
            a = m;
        }
    }
    b
}

/// Largest-bracket bisection for a decreasing g: smallest x ≥ lo with g(x) ≤ y.
fn invert_decreasing<F: Fn(f64) -> f64>(g: F, y: f64, lo: f64) -> f64 {
    invert_nondecreasing(|x| -g(x), -y, lo)
}

// ---------------------------------------------------------------------------
// Tail / pricing / hazard bounds for α-strongly regular distributions.
// ---------------------------------------------------------------------------

impl Distribution {
    /// Tail bounds at x ≥ r for an α-strongly regular distribution. Returns
    /// `(power_form, exp_form)`; both dominate Pr[v ≥ x].
    pub fn tail_bound_alpha(&self, x: f64) -> Result<(f64, f64)> {
        let alpha = self
            .alpha_strong()
            .ok_or_else(|| Error::PreconditionViolated("alpha_strong not set".into()))?;
        let r = self.reserve()?;
        if x < r {
            return Err(Error::PreconditionViolated(format!("x {x} below reserve {r}")));
        }
        let tr = self.tail(r);
        let ratio = x / r;
        let exp_form = tr * (-(ratio - 1.0) / (alpha + (1.0 - alpha) * ratio)).exp();
        let power_form = if alpha >= 1.0 {
            exp_form // the power form degenerates to the exponential form
        } else {
            tr * (r / ((1.0 - alpha) * x + alpha * r)).powf(1.0 / (1.0 - alpha))
        };
        Ok((power_form, exp_form))
    }

    /// Upper bound on the posted-price revenue p·Pr[v ≥ p] at p ≥ r for an
    /// α-strongly regular distribution with α > 0.
    pub fn pricing_bound_alpha(&self, p: f64) -> Result<f64> {
        let alpha = self
            .alpha_strong()
            .ok_or_else(|| Error::PreconditionViolated("alpha_strong not set".into()))?;
        if alpha <= 0.0 {
            return Err(Error::PreconditionViolated(
                "pricing bound needs α > 0".into(),
            ));
        }
        let r = self.reserve()?;
        if p < r {
            return Err(Error::PreconditionViolated(format!("p {p} below reserve {r}")));
        }
        let tr = self.tail(r);
        if alpha >= 1.0 {
            // MHR limit of the bound via the exponential tail form.
            return Ok(p * tr * (-(p / r - 1.0)).exp());
        }
        let one_minus = 1.0 - alpha;
        Ok(r * tr * one_minus.powf(-1.0 / one_minus) * (r / p).powf(alpha / one_minus))
    }

    /// Lower bound on the hazard rate at v′ ≥ v implied by α-strong
    /// regularity: 1/((1−α)(v′−v) + 1/h(v)).
    pub fn hazard_lower_bound(&self, v: f64, v_prime: f64) -> Result<f64> {
        let alpha = self
            .alpha_strong()
            .ok_or_else(|| Error::PreconditionViolated("alpha_strong not set".into()))?;
        if v_prime < v {
            return Err(Error::PreconditionViolated(format!(
                "v' {v_prime} below v {v}"
            )));
        }
        let h = self.hazard_rate(v)?;
        Ok(1.0 / ((1.0 - alpha) * (v_prime - v) + 1.0 / h))
    }
}

// ---------------------------------------------------------------------------
// Extreme-value anchoring point.
// ---------------------------------------------------------------------------

/// Scale β for the supremum of n MHR draws: Pr[sup ≥ β/2] ≥ 1 − 1/√e and the
/// tail mass above 2β·ln(1/ε) is ≤ 36βε·ln(1/ε) for ε ∈ {2⁻⁶, 2⁻¹¹}. Both
/// conditions are validated by Monte Carlo at 3 standard errors.
pub fn anchoring_point(d: &Distribution, n: usize, trials: u64, seed: u64) -> Result<f64> {
    if !d.is_mhr() {
        return Err(Error::PreconditionViolated("anchoring point needs MHR".into()));
    }
    if n == 0 || trials < 1000 {
        return Err(Error::BadParam("need n ≥ 1 and trials ≥ 1000".into()));
    }
    // β/2 slightly inside the exact (1 − 1/√e)-quantile of the supremum, so
    // the probability condition holds with margin rather than at equality.
    let t_star = d.quantile((-1.0 / (2.0 * n as f64)).exp()) * 0.99;
    let candidates = [t_star, t_star * 0.5, t_star * 2.0, t_star * 0.25, t_star * 4.0];
    for cand in candidates {
        let beta = 2.0 * cand.max(f64::MIN_POSITIVE);
        if anchoring_holds(d, n, beta, trials, seed) {
            return Ok(beta);
        }
    }
    Err(Error::SearchFailed("no anchoring point on the grid".into()))
}

/// Monte-Carlo check of both anchoring-point conditions at 3σ slack.
pub fn anchoring_holds(d: &Distribution, n: usize, beta: f64, trials: u64, seed: u64) -> bool {
    let eps_grid = [2f64.powi(-6), 2f64.powi(-11)];
    let mut hit = 0u64;
    let mut tail_sum = [0.0f64; 2];
    let mut tail_sq = [0.0f64; 2];
    for t in 0..trials {
        let mut rng = rng::stream(seed, StreamDomain::Trial, t);
        let mut sup = f64::NEG_INFINITY;
        for _ in 0..n {
            sup = sup.max(d.sample(&mut rng));
        }
        if sup >= beta / 2.0 {
            hit += 1;
        }
        for (k, eps) in eps_grid.iter().enumerate() {
            let cut = 2.0 * beta * (1.0 / eps).ln();
            let x = if sup >= cut { sup } else { 0.0 };
            tail_sum[k] += x;
            tail_sq[k] += x * x;
        }
    }
    let m = trials as f64;
    let p_hat = hit as f64 / m;
    let p_se = (p_hat * (1.0 - p_hat) / m).sqrt();
    let target = 1.0 - (-0.5f64).exp();
    if p_hat < target - 3.0 * p_se {
        return false;
    }
    for (k, eps) in eps_grid.iter().enumerate() {
        let mean = tail_sum[k] / m;
        let var = (tail_sq[k] / m - mean * mean).max(0.0);
        let se = (var / m).sqrt();
        let bound = 36.0 * beta * eps * (1.0 / eps).ln();
        if mean > bound + 3.0 * se {
            return false;
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Optimal-auction revenue.
// ---------------------------------------------------------------------------

/// How a revenue figure was computed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RevMethod {
    /// Exact closed form (single bidder, or the two-point family).
    ClosedForm,
    /// Adaptive quadrature of the order-statistic integrals.
    Quadrature,
    /// Seeded Monte Carlo over i.i.d. value draws.
    MonteCarlo,
}

/// Reserve and optimal-auction revenue for one distribution.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RevenueFigure {
    /// Myerson reserve r(D).
    pub reserve: f64,
    /// Optimal revenue with a single bidder.
    pub rev_single: f64,
    /// Optimal revenue with n i.i.d. bidders.
    pub rev_n: f64,
    /// Computation method for `rev_n`.
    pub method: RevMethod,
    /// Standard error when `method` is Monte Carlo.
    pub std_error: Option<f64>,
}

/// Optimal-auction expected revenue for n i.i.d. bidders from `d`.
///
/// The revenue equals the expectation of the winning payment of the optimal
/// auction: the highest bidder above the reserve pays the larger of the
/// reserve and the second-highest value (all in-scope families are i.i.d.
/// and regular, where this coincides with expected positive virtual welfare).
pub fn myerson_revenue(d: &Distribution, n: usize, method: RevMethod) -> Result<RevenueFigure> {
    myerson_revenue_seeded(d, n, method, 100_000, 0)
}

/// As [`myerson_revenue`], with explicit Monte-Carlo trial count and seed.
pub fn myerson_revenue_seeded(
    d: &Distribution,
    n: usize,
    method: RevMethod,
    trials: u64,
    seed: u64,
) -> Result<RevenueFigure> {
    if n == 0 {
        return Err(Error::BadParam("need n ≥ 1".into()));
    }
    let r = d.reserve()?;
    let rev_single = r * d.tail(r);
    let (rev_n, std_error) = match method {
        RevMethod::ClosedForm => (closed_form_rev(d, n, rev_single)?, None),
        RevMethod::Quadrature => (quadrature_rev(d, n, r)?, None),
        RevMethod::MonteCarlo => {
            let (m, se) = monte_carlo_rev(d, n, r, trials, seed);
            (m, Some(se))
        }
    };
    Ok(RevenueFigure { reserve: r, rev_single, rev_n, method, std_error })
}

fn closed_form_rev(d: &Distribution, n: usize, rev_single: f64) -> Result<f64> {
    if n == 1 {
        return Ok(rev_single);
    }
    match d.family() {
        // Winner pays 2 exactly when at least two draws equal 2.
        Family::DiscreteTwoPoint => Ok(2.0 - (n as f64 + 1.0) / 2f64.powi(n as i32)),
        _ => Err(Error::PreconditionViolated(format!(
            "no closed form for {d} with n = {n}"
        ))),
    }
}

/// Whether ϕ is strictly increasing (no flat regions) on the support.
fn phi_strictly_increasing(d: &Distribution) -> bool {
    match d.family() {
        Family::Exponential { .. } | Family::PowerTailAlpha { .. } => true,
        Family::Truncated { base, .. } => phi_strictly_increasing(base),
        _ => false,
    }
}

fn quadrature_rev(d: &Distribution, n: usize, r: f64) -> Result<f64> {
    if phi_strictly_increasing(d) {
        // E[max(0, ϕ(X_max))] via the quantile of the maximum, Q(u^{1/n}).
        let nn = n as f64;
        let f = |u: f64| {
            let v = d.quantile(u.powf(1.0 / nn));
            d.virtual_value(v.min(d.support_hi())).unwrap_or(0.0).max(0.0)
        };
        return Ok(quad::integrate(&f, 1e-15, 1.0 - 1e-12, 1e-8));
    }
    // Order-statistic price formula:
    // E[price] = r·Pr[X_(1) ≥ r] + ∫_r^∞ Pr[X_(2) ≥ t] dt.
    let nn = n as f64;
    let p_sale = 1.0 - (1.0 - d.tail(r)).powf(nn);
    let second_tail = |t: f64| {
        let p = d.tail(t);
        let q = 1.0 - p;
        1.0 - q.powf(nn) - nn * p * q.powf(nn - 1.0)
    };
    let hi = d.support_hi();
    let tail_part = if n == 1 {
        0.0
    } else if hi.is_finite() {
        quad::integrate(&second_tail, r, hi, 1e-8)
    } else {
        quad::integrate_tail(&second_tail, r, 1e-8)
    };
    Ok(r * p_sale + tail_part)
}

fn monte_carlo_rev(d: &Distribution, n: usize, r: f64, trials: u64, seed: u64) -> (f64, f64) {
    let mut sum = 0.0;
    let mut sq = 0.0;
    for t in 0..trials {
        let mut rng = rng::stream(seed, StreamDomain::Trial, t);
        let mut best = f64::NEG_INFINITY;
        let mut second = f64::NEG_INFINITY;
        for _ in 0..n {
            let v = d.sample(&mut rng);
            if v > best {
                second = best;
                best = v;
            } else if v > second {
                second = v;
            }
        }
        let price = if best >= r { second.max(r) } else { 0.0 };
        sum += price;
        sq += price * price;
    }
    let m = trials as f64;
    let mean = sum / m;
    let var = (sq / m - mean * mean).max(0.0);
    (mean, (var / m).sqrt())
}

// ---------------------------------------------------------------------------
// Spec-string grammar.
// ---------------------------------------------------------------------------

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.family {
            Family::Exponential { rate } => write!(f, "exp:{rate}"),
            Family::PowerTailAlpha { alpha } => write!(f, "alpha:{alpha}"),
            Family::EqualRevenue => write!(f, "er"),
            Family::UltraExponential => write!(f, "ultra"),
            Family::DiscreteTwoPoint => write!(f, "two"),
            Family::Truncated { base, cap } => write!(f, "trunc:{base}:{cap}"),
            Family::Discretized { base, step } => write!(f, "disc:{base}:{step}"),
        }
    }
}

impl std::str::FromStr for Distribution {
    type Err = Error;

    /// Parse the CLI grammar: `exp:<λ>`, `alpha:<α>`, `er`, `ultra`, `two`,
    /// `trunc:<spec>:<T>`, `disc:<spec>:<ε>`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::SchemaError(format!("unknown distribution spec '{s}'"));
        if s == "er" {
            return Ok(Distribution::equal_revenue());
        }
        if s == "ultra" {
            return Ok(Distribution::ultra_exponential());
        }
        if s == "two" {
            return Ok(Distribution::two_point());
        }
        if let Some(rest) = s.strip_prefix("exp:") {
            let rate: f64 = rest.parse().map_err(|_| bad())?;
            return Distribution::exponential(rate).map_err(|_| bad());
        }
        if let Some(rest) = s.strip_prefix("alpha:") {
            let alpha: f64 = rest.parse().map_err(|_| bad())?;
            return Distribution::power_tail(alpha).map_err(|_| bad());
        }
        if let Some(rest) = s.strip_prefix("trunc:") {
            let (inner, cap) = rest.rsplit_once(':').ok_or_else(bad)?;
            let cap: f64 = cap.parse().map_err(|_| bad())?;
            return Distribution::truncated(inner.parse()?, cap).map_err(|_| bad());
        }
        if let Some(rest) = s.strip_prefix("disc:") {
            let (inner, step) = rest.rsplit_once(':').ok_or_else(bad)?;
            let step: f64 = step.parse().map_err(|_| bad())?;
            return Distribution::discretized(inner.parse()?, step).map_err(|_| bad());
        }
        Err(bad())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exp1() -> Distribution {
        Distribution::exponential(1.0).unwrap()
    }

    fn alpha_half() -> Distribution {
        Distribution::power_tail(0.5).unwrap()
    }

    /// Independent oracle: hazard rate from finite differences of the tail.
    fn hazard_oracle(d: &Distribution, v: f64) -> f64 {
        let h = 1e-6 * v.abs().max(1.0);
        (d.tail(v) - d.tail(v + h)) / (h * d.tail(v))
    }

    /// Independent oracle: best posted price revenue by brute grid search.
    fn grid_max_revenue(d: &Distribution, lo: f64, hi: f64) -> f64 {
        let mut best: f64 = 0.0;
        for i in 0..200_000 {
            let p = lo + (hi - lo) * i as f64 / 200_000.0;
            best = best.max(p * d.tail(p));
        }
        best
    }

    #[test]
    fn exponential_calculus() {
        let d = exp1();
        assert!((d.cdf(1.0) - (1.0 - (-1.0f64).exp())).abs() < 1e-15);
        assert_eq!(d.virtual_value(3.0).unwrap(), 2.0);
        assert_eq!(d.hazard_rate(5.0).unwrap(), 1.0);
        assert_eq!(d.reserve().unwrap(), 1.0);
        assert!((hazard_oracle(&d, 2.3) - 1.0).abs() < 1e-4);
        // Round trip through the quantile.
        for &u in &[0.0, 0.1, 0.5, 0.9, 0.999] {
            let v = d.quantile(u);
            assert!((d.cdf(v) - u).abs() < 1e-12);
        }
    }

    #[test]
    fn power_tail_calculus() {
        let d = alpha_half();
        assert_eq!(d.cdf(2.0), 1.0 - 0.25);
        assert_eq!(d.virtual_value(4.0).unwrap(), 2.0);
        assert_eq!(d.reserve().unwrap(), 1.0);
        assert!((d.hazard_rate(3.7).unwrap() - hazard_oracle(&d, 3.7)).abs() < 1e-3);
        // α-strong regularity on a grid: slopes of ϕ at least α.
        let alpha = d.alpha_strong().unwrap();
        let mut prev = d.virtual_value(1.0).unwrap();
        let mut prev_v = 1.0;
        for i in 1..1000 {
            let v = 1.0 * 1.02f64.powi(i);
            let p = d.virtual_value(v).unwrap();
            assert!(p - prev >= alpha * (v - prev_v) - 1e-9);
            prev = p;
            prev_v = v;
        }
    }

    #[test]
    fn equal_revenue_calculus() {
        let d = Distribution::equal_revenue();
        assert_eq!(d.cdf(2.0), 0.5);
        assert_eq!(d.quantile(0.5), 2.0);
        assert_eq!(d.virtual_value(10.0).unwrap(), 0.0);
        assert_eq!(d.inverse_virtual_value(0.0).unwrap(), 1.0);
        assert_eq!(d.inverse_virtual_value(0.5).unwrap(), f64::INFINITY);
        assert!(matches!(d.mean(), Err(Error::InfiniteMean)));
        // Every posted price earns exactly 1.
        for &p in &[1.0, 3.0, 100.0, 1e6] {
            assert!((p * d.tail(p) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn superlog_and_tetration() {
        assert_eq!(superlog(1.0).unwrap(), 0.0);
        assert!((superlog(std::f64::consts::E).unwrap() - 1.0).abs() < 1e-12);
        let ee = std::f64::consts::E.exp();
        assert!((superlog(ee).unwrap() - 2.0).abs() < 1e-12);
        // superlog(e^x) = 1 + superlog(x)
        for &x in &[0.3, 1.0, 2.5, 10.0] {
            let lhs = superlog(x.exp()).unwrap();
            let rhs = 1.0 + superlog(x).unwrap();
            assert!((lhs - rhs).abs() < 1e-9, "x = {x}");
        }
        // Round trip h(ln* x) = x at 1e−9 relative.
        for &x in &[0.5, 1.0, 2.0, 10.0, 1e6, 1e300] {
            let s = superlog(x).unwrap();
            let back = tetration(s).unwrap();
            assert!((back - x).abs() <= 1e-9 * x.abs().max(1.0), "x = {x}, back = {back}");
        }
    }

    #[test]
    fn ultra_exponential_calculus() {
        let d = Distribution::ultra_exponential();
        let e = std::f64::consts::E;
        assert!((d.tail(e) - 1.0 / e).abs() < 1e-15);
        assert!((d.tail(3.0) - 1.0 / (3.0 * 3.0f64.ln())).abs() < 1e-15);
        // ϕ is 0 on (1, e] and x/(1 + ln x) just above.
        assert_eq!(d.virtual_value(2.0).unwrap(), 0.0);
        let phi5 = d.virtual_value(5.0).unwrap();
        assert!((phi5 - 5.0 / (1.0 + 5.0f64.ln())).abs() < 1e-12);
        // Hazard at the support edge matches the derivative of ln* at 1.
        assert_eq!(d.hazard_rate(1.0).unwrap(), 1.0);
        assert!((hazard_oracle(&d, 4.0) - d.hazard_rate(4.0).unwrap()).abs() < 1e-3);
        // Unit-revenue claim: p·Pr[v ≥ p] ≤ 1 everywhere.
        for i in 0..1000 {
            let p = 1.0 + 10f64.powf(i as f64 / 999.0 * 15.0) - 1.0;
            assert!(p * d.tail(p) <= 1.0 + 1e-12, "p = {p}");
        }
        // Quantile inverts the tail.
        for &u in &[0.0, 0.3, 0.9, 0.999, 1.0 - 1e-9] {
            let v = d.quantile(u);
            assert!((d.cdf(v) - u).abs() < 1e-9, "u = {u}");
        }
        assert!(matches!(d.mean(), Err(Error::InfiniteMean)));
    }

    #[test]
    fn ultra_price_mass_in_superlog_coordinates() {
        // Against the direct product where f64 still reaches.
        for &x in &[1.5, 3.0, 20.0, 1e5, 1e80] {
            let s = superlog(x).unwrap();
            let direct = x * ultra_tail(x);
            let via = ultra_price_mass(s).unwrap();
            assert!(
                (via - direct).abs() <= 1e-6 * direct,
                "x = {x}: {via} vs {direct}"
            );
        }
        // Far beyond f64 range for x the product underflows to exactly 0.
        assert_eq!(ultra_price_mass(6.0).unwrap(), 0.0);
    }

    #[test]
    fn two_point_calculus() {
        let d = Distribution::two_point();
        assert_eq!(d.cdf(1.0), 0.5);
        assert_eq!(d.tail(1.0), 1.0);
        assert_eq!(d.tail(1.5), 0.5);
        assert_eq!(d.quantile(0.25), 1.0);
        assert_eq!(d.quantile(0.75), 2.0);
        assert_eq!(d.virtual_value(1.0).unwrap(), 0.0);
        assert_eq!(d.virtual_value(2.0).unwrap(), 2.0);
        assert_eq!(d.reserve().unwrap(), 1.0);
        assert_eq!(d.mean().unwrap(), 1.5);
    }

    #[test]
    fn truncated_and_discretized() {
        let t = Distribution::truncated(exp1(), 2.0).unwrap();
        assert_eq!(t.tail(1.5), exp1().tail(1.5));
        assert_eq!(t.tail(2.0), exp1().tail(2.0)); // atom at the cap
        assert_eq!(t.tail(2.5), 0.0);
        assert_eq!(t.cdf(2.0), 1.0);
        assert_eq!(t.virtual_value(2.0).unwrap(), 2.0);
        assert!((t.mean().unwrap() - (1.0 - (-2.0f64).exp())).abs() < 1e-8);

        let g = Distribution::discretized(exp1(), 0.1).unwrap();
        assert_eq!(g.quantile(0.5), (exp1().quantile(0.5) / 0.1).floor() * 0.1);
        // Tail domination and the expectation band E[X] − ε ≤ E[X_ε] ≤ E[X].
        for i in 0..100 {
            let v = i as f64 * 0.07;
            assert!(g.tail(v) <= exp1().tail(v) + 1e-15);
        }
        let m = g.mean().unwrap();
        assert!(m <= 1.0 + 1e-9 && m >= 0.9 - 1e-9, "mean {m}");

        // Discretizing the two-point family at ε = 1 changes nothing.
        let d2 = Distribution::discretized(Distribution::two_point(), 1.0).unwrap();
        for &v in &[0.5, 1.0, 1.5, 2.0, 2.5] {
            assert_eq!(d2.cdf(v), Distribution::two_point().cdf(v));
        }
    }

    #[test]
    fn virtual_value_monotone_on_grids() {
        let dists: Vec<Distribution> = vec![
            exp1(),
            Distribution::exponential(2.5).unwrap(),
            alpha_half(),
            Distribution::power_tail(0.3).unwrap(),
            Distribution::power_tail(0.9).unwrap(),
            Distribution::equal_revenue(),
            Distribution::ultra_exponential(),
            Distribution::truncated(alpha_half(), 50.0).unwrap(),
        ];
        for d in &dists {
            let lo = d.support_lo().max(1e-9);
            let hi = d.quantile(1.0 - 1e-9).min(d.support_hi());
            let mut prev = f64::NEG_INFINITY;
            for i in 0..1000 {
                let v = lo * (hi / lo).powf(i as f64 / 999.0);
                let p = d.virtual_value(v).unwrap();
                assert!(p >= prev - 1e-9, "{d} at v = {v}");
                prev = p;
            }
        }
    }

    #[test]
    fn inverse_virtual_value_round_trip() {
        for d in [exp1(), alpha_half(), Distribution::power_tail(0.9).unwrap()] {
            for i in 0..200 {
                let v = d.support_lo().max(0.01) + i as f64 * 0.37 + 0.05;
                let y = d.virtual_value(v).unwrap();
                let back = d.inverse_virtual_value(y).unwrap();
                if y > d.virtual_value(d.support_lo().max(d.reserve().unwrap() * 0.0 + d.support_lo())).unwrap_or(0.0) {
                    assert!(
                        (back - v).abs() <= 1e-9 * v.abs().max(1.0),
                        "{d} at v = {v}: back = {back}"
                    );
                }
            }
        }
        // Plateaus take the inf-convention.
        let u = Distribution::ultra_exponential();
        assert_eq!(u.inverse_virtual_value(0.0).unwrap(), 1.0);
        let e = std::f64::consts::E;
        let just_above = u.inverse_virtual_value(0.1).unwrap();
        assert!((just_above - e).abs() < 1e-6, "got {just_above}");
    }

    #[test]
    fn tail_bounds_dominate() {
        for d in [
            Distribution::power_tail(0.3).unwrap(),
            alpha_half(),
            Distribution::power_tail(0.9).unwrap(),
        ] {
            let r = d.reserve().unwrap();
            let hi = d.quantile(1.0 - 1e-9);
            for i in 0..1000 {
                let x = r * (hi / r).powf(i as f64 / 999.0);
                let (pw, ex) = d.tail_bound_alpha(x).unwrap();
                let exact = d.tail(x);
                assert!(exact <= pw * (1.0 + 1e-12) + 1e-300, "{d} power at {x}");
                assert!(exact <= ex * (1.0 + 1e-12) + 1e-300, "{d} exp at {x}");
            }
        }
        // Frozen spot values for α = 1/2 at x = 4: exact 1/16, bounds 0.16 and e^{−1.2}.
        let d = alpha_half();
        let (pw, ex) = d.tail_bound_alpha(4.0).unwrap();
        assert!((pw - 0.16).abs() < 1e-12);
        assert!((ex - (-1.2f64).exp()).abs() < 1e-12);
        assert!(d.tail(4.0) == 0.0625);
        // The exponential family saturates the exponential form exactly.
        let e = exp1();
        let (_, exf) = e.tail_bound_alpha(3.0).unwrap();
        assert!((exf - (-3.0f64).exp()).abs() < 1e-15);
        assert!((e.tail(3.0) - (-3.0f64).exp()).abs() < 1e-15);
    }

    #[test]
    fn pricing_bound_dominates() {
        let d = alpha_half();
        // Frozen: bound at p = 4 is 1.0; exact posted revenue is 0.25.
        let b = d.pricing_bound_alpha(4.0).unwrap();
        assert!((b - 1.0).abs() < 1e-12);
        assert!(4.0 * d.tail(4.0) <= b);
        for dd in [
            Distribution::power_tail(0.3).unwrap(),
            d.clone(),
            Distribution::power_tail(0.9).unwrap(),
            exp1(),
        ] {
            let r = dd.reserve().unwrap();
            let hi = dd.quantile(1.0 - 1e-9);
            for i in 0..1000 {
                let p = r * (hi / r).powf(i as f64 / 999.0);
                let bound = dd.pricing_bound_alpha(p).unwrap();
                assert!(p * dd.tail(p) <= bound * (1.0 + 1e-12), "{dd} at {p}");
            }
        }
        assert!(Distribution::equal_revenue().pricing_bound_alpha(2.0).is_err());
    }

    #[test]
    fn hazard_bound_dominates() {
        // The power-tail family saturates the bound with equality.
        let d = alpha_half();
        let b = d.hazard_lower_bound(1.0, 2.0).unwrap();
        assert!((b - d.hazard_rate(2.0).unwrap()).abs() < 1e-12);
        for dd in [exp1(), Distribution::power_tail(0.3).unwrap(), d] {
            for i in 0..1000 {
                let v = dd.support_lo().max(0.5) + i as f64 * 0.01;
                let vp = v + 1.0 + i as f64 * 0.002;
                let bound = dd.hazard_lower_bound(v, vp).unwrap();
                assert!(
                    dd.hazard_rate(vp).unwrap() >= bound - 1e-12,
                    "{dd} at ({v}, {vp})"
                );
            }
        }
    }

    #[test]
    fn myerson_revenue_figures() {
        // Exponential, one bidder: reserve 1, revenue 1/e; grid-max oracle agrees.
        let f = myerson_revenue(&exp1(), 1, RevMethod::ClosedForm).unwrap();
        assert!((f.rev_single - (-1.0f64).exp()).abs() < 1e-12);
        let oracle = grid_max_revenue(&exp1(), 0.0, 20.0);
        assert!((f.rev_single - oracle).abs() <= 0.01 * oracle);

        // Equal revenue and ultra: unit revenue for a single bidder.
        for d in [Distribution::equal_revenue(), Distribution::ultra_exponential()] {
            let f = myerson_revenue(&d, 1, RevMethod::Quadrature).unwrap();
            assert!((f.rev_single - 1.0).abs() < 1e-12);
            assert!((f.rev_n - 1.0).abs() < 1e-6);
            let oracle = grid_max_revenue(&d, 1.0, 1000.0);
            assert!((f.rev_single - oracle).abs() <= 0.01 * oracle);
        }

        // Two-point closed form: 1 bidder → 1, 2 bidders → 5/4.
        let two = Distribution::two_point();
        assert_eq!(myerson_revenue(&two, 1, RevMethod::ClosedForm).unwrap().rev_n, 1.0);
        assert_eq!(myerson_revenue(&two, 2, RevMethod::ClosedForm).unwrap().rev_n, 1.25);
        let q = myerson_revenue(&two, 2, RevMethod::Quadrature).unwrap();
        assert!((q.rev_n - 1.25).abs() < 1e-6);

        // Power tail α = 1/2: Rev(D) = 1 and Rev(D²) = 4/3 by the 2nd-order tail.
        let a = alpha_half();
        let f1 = myerson_revenue(&a, 1, RevMethod::Quadrature).unwrap();
        assert!((f1.rev_n - 1.0).abs() < 1e-6);
        let f2 = myerson_revenue(&a, 2, RevMethod::Quadrature).unwrap();
        assert!((f2.rev_n - 4.0 / 3.0).abs() < 1e-5);

        // Monte Carlo agrees with quadrature within 3σ.
        let qe = myerson_revenue(&exp1(), 2, RevMethod::Quadrature).unwrap();
        let mc = myerson_revenue_seeded(&exp1(), 2, RevMethod::MonteCarlo, 100_000, 11).unwrap();
        let se = mc.std_error.unwrap();
        assert!((mc.rev_n - qe.rev_n).abs() <= 3.0 * se, "{} vs {}", mc.rev_n, qe.rev_n);
        assert!(qe.rev_n >= qe.rev_single);
    }

    #[test]
    fn kolmogorov_smirnov_sampling() {
        use crate::rng::{stream, StreamDomain};
        let dists = vec![
            exp1(),
            alpha_half(),
            Distribution::equal_revenue(),
            Distribution::ultra_exponential(),
            Distribution::two_point(),
        ];
        for d in dists {
            let n = 100_000usize;
            let mut xs: Vec<f64> = Vec::with_capacity(n);
            let mut rng = stream(42, StreamDomain::Trial, 0);
            for _ in 0..n {
                xs.push(d.sample(&mut rng));
            }
            xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let mut ks: f64 = 0.0;
            for (i, &x) in xs.iter().enumerate() {
                let f = d.cdf(x);
                ks = ks.max((f - i as f64 / n as f64).abs());
                ks = ks.max(((i + 1) as f64 / n as f64 - f).abs());
            }
            assert!(ks < 0.01, "{d}: KS statistic {ks}");
        }
    }

    #[test]
    fn anchoring_point_validates_and_grows() {
        let d = exp1();
        let b1 = anchoring_point(&d, 1, 50_000, 3).unwrap();
        let b4 = anchoring_point(&d, 4, 50_000, 3).unwrap();
        assert!(b1 > 0.0);
        assert!(b4 > b1, "β should grow with n: {b1} vs {b4}");
        // Spot value from the two-point family: β = 2 satisfies both checks.
        let two = Distribution::two_point();
        assert!(anchoring_holds(&two, 1, 2.0, 20_000, 5));
    }

    #[test]
    fn spec_strings_round_trip() {
        for s in [
            "exp:1",
            "exp:2.5",
            "alpha:0.5",
            "er",
            "ultra",
            "two",
            "trunc:alpha:0.5:100",
            "disc:exp:1:0.1",
            "trunc:disc:exp:2:0.5:10",
        ] {
            let d: Distribution = s.parse().unwrap();
            let shown = d.to_string();
            let again: Distribution = shown.parse().unwrap();
            assert_eq!(d, again, "{s} → {shown}");
        }
        assert!("exp".parse::<Distribution>().is_err());
        assert!("alpha:1.5".parse::<Distribution>().is_err());
        assert!("nope:3".parse::<Distribution>().is_err());
    }
}
