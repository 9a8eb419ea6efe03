//! Shared numerical building blocks: finite-difference stencils on uniform
//! grids, composite and adaptive quadrature, root finding, angle unwrapping,
//! polynomial bump functions and local cubic interpolation.

use std::f64::consts::PI;

/// Second-order first derivative on a uniform grid: centered stencils in the
/// interior, one-sided three-point stencils at the ends.
pub fn derivative_uniform(f: &[f64], h: f64) -> Vec<f64> {
    let n = f.len();
    assert!(n >= 3, "derivative needs at least 3 nodes");
    let mut d = vec![0.0; n];
    d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
    for i in 1..n - 1 {
        d[i] = (f[i + 1] - f[i - 1]) / (2.0 * h);
    }
    d[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
    d
}

/// Transpose of [`derivative_uniform`]: accumulates `adj_f[j] += Σ_i a_i ∂d_i/∂f_j`.
pub fn derivative_uniform_transpose(a: &[f64], h: f64, adj_f: &mut [f64]) {
    let n = a.len();
    assert!(n >= 3 && adj_f.len() == n);
    let inv2h = 1.0 / (2.0 * h);
    adj_f[0] += -3.0 * a[0] * inv2h;
    adj_f[1] += 4.0 * a[0] * inv2h;
    adj_f[2] += -a[0] * inv2h;
    for i in 1..n - 1 {
        adj_f[i + 1] += a[i] * inv2h;
        adj_f[i - 1] -= a[i] * inv2h;
    }
    adj_f[n - 1] += 3.0 * a[n - 1] * inv2h;
    adj_f[n - 2] += -4.0 * a[n - 1] * inv2h;
    adj_f[n - 3] += a[n - 1] * inv2h;
}

/// Composite trapezoid rule on a uniform grid.
pub fn trapezoid(f: &[f64], h: f64) -> f64 {
    let n = f.len();
    if n < 2 {
        return 0.0;
    }
    let mut s = 0.5 * (f[0] + f[n - 1]);
    for v in &f[1..n - 1] {
        s += v;
    }
    s * h
}

/// Trapezoid weight of node `i` on a uniform grid of `n` nodes.
#[inline]
pub fn trapezoid_weight(i: usize, n: usize, h: f64) -> f64 {
    if i == 0 || i == n - 1 {
        0.5 * h
    } else {
        h
    }
}

/// Adaptive Simpson quadrature with absolute tolerance `tol`.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> f64 {
    fn simpson<F: Fn(f64) -> f64>(f: &F, a: f64, fa: f64, b: f64, fb: f64) -> (f64, f64, f64) {
        let m = 0.5 * (a + b);
        let fm = f(m);
        ((b - a) / 6.0 * (fa + 4.0 * fm + fb), m, fm)
    }
    fn recurse<F: Fn(f64) -> f64>(
        f: &F,
        a: f64,
        fa: f64,
        b: f64,
        fb: f64,
        whole: f64,
        m: f64,
        fm: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let (left, lm, flm) = simpson(f, a, fa, m, fm);
        let (right, rm, frm) = simpson(f, m, fm, b, fb);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            left + right + delta / 15.0
        } else {
            recurse(f, a, fa, m, fm, left, lm, flm, 0.5 * tol, depth - 1)
                + recurse(f, m, fm, b, fb, right, rm, frm, 0.5 * tol, depth - 1)
        }
    }
    let fa = f(a);
    let fb = f(b);
    let (whole, m, fm) = simpson(&f, a, fa, b, fb);
    recurse(&f, a, fa, b, fb, whole, m, fm, tol, 48)
}

/// Bisection for a root of `f` in `[a, b]`; requires a sign change.
pub fn bisect<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64, tol_x: f64) -> Option<f64> {
    let mut fa = f(a);
    let fb = f(b);
    if fa == 0.0 {
        return Some(a);
    }
    if fb == 0.0 {
        return Some(b);
    }
    if fa.signum() == fb.signum() {
        return None;
    }
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        let fm = f(m);
        if fm == 0.0 || (b - a).abs() <= tol_x {
            return Some(m);
        }
        if fm.signum() == fa.signum() {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    Some(0.5 * (a + b))
}

/// Unwraps a sequence of angles by nearest-branch continuation from the
/// first entry, so that consecutive values differ by less than π.
pub fn unwrap_angles(raw: &[f64]) -> Vec<f64> {
    let mut out = Vec::with_capacity(raw.len());
    if raw.is_empty() {
        return out;
    }
    out.push(raw[0]);
    for i in 1..raw.len() {
        let prev = out[i - 1];
        let mut d = raw[i] - prev;
        while d > PI {
            d -= 2.0 * PI;
        }
        while d < -PI {
            d += 2.0 * PI;
        }
        out.push(prev + d);
    }
    out
}

/// Compactly supported C² polynomial bump `(1 − ξ²)³` on `[-1, 1]`, zero
/// outside. Value, first and second derivative vanish at ±1.
#[inline]
pub fn bump(xi: f64) -> f64 {
    if xi.abs() >= 1.0 {
        0.0
    } else {
        let s = 1.0 - xi * xi;
        s * s * s
    }
}

/// `∫_{-1}^{1} bump = 32/35`.
pub const BUMP_MASS: f64 = 32.0 / 35.0;

/// Antiderivative of `bump` with `F(-1) = 0`, i.e. `F(ξ) = ∫_{-1}^{ξ} bump`.
#[inline]
pub fn bump_antiderivative(xi: f64) -> f64 {
    if xi <= -1.0 {
        0.0
    } else if xi >= 1.0 {
        BUMP_MASS
    } else {
        // ∫ (1-s²)³ ds = s - s³ + (3/5)s⁵ - s⁷/7
        let prim = |s: f64| s - s.powi(3) + 0.6 * s.powi(5) - s.powi(7) / 7.0;
        prim(xi) - prim(-1.0)
    }
}

/// Local cubic (Catmull-Rom) interpolation of uniformly sampled data at a
/// fractional index `pos ∈ [0, n-1]`. Falls back to quadratic at the ends.
pub fn cubic_interp(f: &[f64], pos: f64) -> f64 {
    let n = f.len();
    assert!(n >= 2);
    let pos = pos.clamp(0.0, (n - 1) as f64);
    let i = (pos.floor() as usize).min(n - 2);
    let s = pos - i as f64;
    if n < 4 {
        return f[i] * (1.0 - s) + f[i + 1] * s;
    }
    let i0 = if i == 0 { 0 } else { i - 1 };
    let i3 = (i + 2).min(n - 1);
    let (p0, p1, p2, p3) = (f[i0], f[i], f[i + 1], f[i3]);
    // One-sided tangents at the boundary keep second-order accuracy.
    let m1 = if i == 0 { p2 - p1 } else { 0.5 * (p2 - p0) };
    let m2 = if i + 2 > n - 1 {
        p2 - p1
    } else {
        0.5 * (p3 - p1)
    };
    let s2 = s * s;
    let s3 = s2 * s;
    (2.0 * s3 - 3.0 * s2 + 1.0) * p1
        + (s3 - 2.0 * s2 + s) * m1
        + (-2.0 * s3 + 3.0 * s2) * p2
        + (s3 - s2) * m2
}

/// Classical fourth-order Runge-Kutta step for a scalar autonomous ODE.
#[inline]
pub fn rk4_step<F: Fn(f64) -> f64>(rhs: &F, p: f64, h: f64) -> f64 {
    let k1 = rhs(p);
    let k2 = rhs(p + 0.5 * h * k1);
    let k3 = rhs(p + 0.5 * h * k2);
    let k4 = rhs(p + h * k3);
    p + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derivative_exact_on_quadratic() {
        let h = 0.1;
        let f: Vec<f64> = (0..20).map(|i| {
            let t = i as f64 * h;
            3.0 * t * t - 2.0 * t + 1.0
        }).collect();
        let d = derivative_uniform(&f, h);
        for (i, di) in d.iter().enumerate() {
            let t = i as f64 * h;
            assert!((di - (6.0 * t - 2.0)).abs() < 1e-10, "node {i}");
        }
    }

    #[test]
    fn derivative_transpose_consistent() {
        // <a, D f> == <D^T a, f> for random-ish vectors.
        let h = 0.3;
        let f: Vec<f64> = (0..9).map(|i| ((i * 7 + 3) % 5) as f64 * 0.7 - 1.0).collect();
        let a: Vec<f64> = (0..9).map(|i| ((i * 3 + 1) % 7) as f64 * 0.4 - 1.2).collect();
        let df = derivative_uniform(&f, h);
        let lhs: f64 = a.iter().zip(&df).map(|(x, y)| x * y).sum();
        let mut dta = vec![0.0; 9];
        derivative_uniform_transpose(&a, h, &mut dta);
        let rhs: f64 = dta.iter().zip(&f).map(|(x, y)| x * y).sum();
        assert!((lhs - rhs).abs() < 1e-12);
    }

    #[test]
    fn simpson_matches_closed_form() {
        let v = adaptive_simpson(|u| (1.0 - u * u).abs(), -1.0, 1.0, 1e-12);
        assert!((v - 4.0 / 3.0).abs() < 1e-10);
    }

    #[test]
    fn bump_antiderivative_mass() {
        assert!((bump_antiderivative(1.0) - BUMP_MASS).abs() < 1e-15);
        let mid = bump_antiderivative(0.0);
        assert!((mid - 0.5 * BUMP_MASS).abs() < 1e-15);
    }

    #[test]
    fn unwrap_crosses_branch() {
        let raw = vec![3.0, -3.0, 3.0];
        let w = unwrap_angles(&raw);
        assert!((w[1] - (2.0 * PI - 3.0)).abs() < 1e-12);
        assert!((w[2] - 3.0 - 2.0 * PI).abs() < 1e-12 || (w[2] - 3.0).abs() < 1e-12);
    }
}
