//! Root finding for sampled scalar functions of one variable.

/// Default stopping width for bisection and golden-section search.
pub const DEFAULT_TOL: f64 = 1e-12;

/// A tangential root is accepted when `|f|` at the refined minimum is below
/// this fraction of the largest sampled `|f|` (or of 1).
pub const TOUCH_REL_TOL: f64 = 1e-10;

/// All roots of `f` seen from the samples `xs` (increasing): sample points
/// where `f` is exactly zero, sign changes refined by bisection, and
/// tangential roots refined by golden-section search on `|f|`.
///
/// Roots closer than `tol` to an earlier one are merged.
pub fn roots_1d(f: impl Fn(f64) -> f64, xs: &[f64], tol: f64) -> Vec<f64> {
    let ys: Vec<f64> = xs.iter().map(|&x| f(x)).collect();
    roots_from_samples(&f, xs, &ys, tol)
}

pub fn roots_from_samples(f: &impl Fn(f64) -> f64, xs: &[f64], ys: &[f64], tol: f64) -> Vec<f64> {
    let scale = ys
        .iter()
        .filter(|y| y.is_finite())
        .fold(1.0f64, |m, y| m.max(y.abs()));
    let mut roots: Vec<f64> = Vec::new();
    let push = |r: f64, roots: &mut Vec<f64>| {
        if roots.iter().all(|&q| (q - r).abs() > tol.max(1e-15)) {
            roots.push(r);
        }
    };
    for i in 0..xs.len() {
        if ys[i] == 0.0 {
            push(xs[i], &mut roots);
            continue;
        }
        if i + 1 < xs.len() && ys[i + 1] != 0.0 && ys[i].signum() != ys[i + 1].signum() {
            push(bisect(f, xs[i], xs[i + 1], ys[i], tol), &mut roots);
        }
        if i > 0 && i + 1 < xs.len() {
            let (l, m, r) = (ys[i - 1].abs(), ys[i].abs(), ys[i + 1].abs());
            let same_sign =
                ys[i - 1].signum() == ys[i].signum() && ys[i].signum() == ys[i + 1].signum();
            if same_sign && m <= l && m <= r {
                let x = golden_min(|x| f(x).abs(), xs[i - 1], xs[i + 1], tol);
                let fx = f(x);
                if fx == 0.0 || fx.abs() <= TOUCH_REL_TOL * scale {
                    push(x, &mut roots);
                }
            }
        }
    }
    roots.sort_by(f64::total_cmp);
    roots
}

/// Bisection on `[a, b]` with `f(a) = fa` of opposite sign to `f(b)`.
pub fn bisect(f: &impl Fn(f64) -> f64, mut a: f64, mut b: f64, mut fa: f64, tol: f64) -> f64 {
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if (b - a).abs() <= tol || m == a || m == b {
            return m;
        }
        let fm = f(m);
        if fm == 0.0 {
            return m;
        }
        if fm.signum() == fa.signum() {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

/// Golden-section minimization of a unimodal function on `[a, b]`.
pub fn golden_min(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> f64 {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..300 {
        if (b - a).abs() <= tol {
            break;
        }
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    if fc < fd {
        c
    } else {
        d
    }
}
