//! Adaptive Simpson quadrature for the revenue and lemma integrals.

/// Integrate `f` over `[a, b]` to relative tolerance `rel` (with a small
/// absolute floor so integrals near zero terminate).
pub fn integrate<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, rel: f64) -> f64 {
    if a >= b {
        return 0.0;
    }
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = simpson(a, b, fa, fm, fb);
    adapt(f, a, b, fa, fm, fb, whole, rel, 52)
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn adapt<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    rel: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let err = left + right - whole;
    // Relative tolerance against the local panel, with an absolute floor so
    // panels that integrate to ~0 still terminate.
    let tol = rel * (left + right).abs() + 1e-16;
    if depth == 0 || err.abs() <= 15.0 * tol {
        return left + right + err / 15.0;
    }
    adapt(f, a, m, fa, flm, fm, left, rel, depth - 1)
        + adapt(f, m, b, fm, frm, fb, right, rel, depth - 1)
}

/// Integrate `g` over the unbounded tail `[a, ∞)` via the substitution
/// `t = a + s/(1−s)` on `s ∈ [0, 1)`.
pub fn integrate_tail<F: Fn(f64) -> f64>(g: &F, a: f64, rel: f64) -> f64 {
    let sub = |s: f64| {
        let one_minus = 1.0 - s;
        let t = a + s / one_minus;
        g(t) / (one_minus * one_minus)
    };
    integrate(&sub, 0.0, 1.0 - 1e-12, rel)
}
