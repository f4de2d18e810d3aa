use crate::error::{Error, Result};

/// Panel budget for [`adaptive_simpson`].
pub const MAX_PANELS: usize = 1 << 20;

const MAX_DEPTH: u32 = 60;

struct Panel {
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

/// Adaptive Simpson integration of `f` over `[a, b]` to absolute tolerance
/// `tol`, using the usual `|S₂ − S₁| ≤ 15·tol` acceptance with Richardson
/// correction. Runs on an explicit stack, so deep refinement cannot
/// overflow the call stack; fails once [`MAX_PANELS`] panels are accepted
/// or split without converging.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<f64> {
    if a == b {
        return Ok(0.0);
    }
    if b < a {
        return adaptive_simpson(f, b, a, tol).map(|v| -v);
    }
    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (f(a), f(m), f(b));
    let mut stack = vec![Panel {
        a,
        b,
        fa,
        fm,
        fb,
        whole: simpson(a, b, fa, fm, fb),
        tol,
        depth: 0,
    }];
    let mut total = 0.0;
    let mut compensation = 0.0;
    let mut panels = 0usize;

    while let Some(p) = stack.pop() {
        panels += 1;
        if panels > MAX_PANELS {
            return Err(Error::QuadratureFailure { panels: MAX_PANELS });
        }
        let m = 0.5 * (p.a + p.b);
        let lm = 0.5 * (p.a + m);
        let rm = 0.5 * (m + p.b);
        let (flm, frm) = (f(lm), f(rm));
        let left = simpson(p.a, m, p.fa, flm, p.fm);
        let right = simpson(m, p.b, p.fm, frm, p.fb);
        let delta = left + right - p.whole;
        if delta.abs() <= 15.0 * p.tol || p.depth >= MAX_DEPTH {
            if p.depth >= MAX_DEPTH && delta.abs() > 15.0 * p.tol {
                return Err(Error::QuadratureFailure { panels });
            }
            // Neumaier summation of accepted panels
            let v = left + right + delta / 15.0;
            let t = total + v;
            if total.abs() >= v.abs() {
                compensation += (total - t) + v;
            } else {
                compensation += (v - t) + total;
            }
            total = t;
        } else {
            let half = 0.5 * p.tol;
            stack.push(Panel {
                a: m,
                b: p.b,
                fa: p.fm,
                fm: frm,
                fb: p.fb,
                whole: right,
                tol: half,
                depth: p.depth + 1,
            });
            stack.push(Panel {
                a: p.a,
                b: m,
                fa: p.fa,
                fm: flm,
                fb: p.fm,
                whole: left,
                tol: half,
                depth: p.depth + 1,
            });
        }
    }
    Ok(total + compensation)
}
