//! Grid search with golden-section polishing over Bloch angles.

use std::f64::consts::PI;

const INV_PHI: f64 = 0.618_033_988_749_894_9;
const GOLDEN_ITERS: usize = 48;

/// Maximizes a unimodal-ish `f` on `[lo, hi]`; returns `(x, f(x))`.
pub fn golden_max(mut f: impl FnMut(f64) -> f64, lo: f64, hi: f64) -> (f64, f64) {
    let (mut a, mut b) = (lo, hi);
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..GOLDEN_ITERS {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    if fc >= fd {
        (c, fc)
    } else {
        (d, fd)
    }
}

/// `n` polar angles covering `[0, π]` including both poles.
pub fn theta_grid(n: usize) -> Vec<f64> {
    let n = n.max(2);
    (0..n).map(|k| PI * k as f64 / (n - 1) as f64).collect()
}

/// `n` azimuths evenly spaced on `[0, 2π)`.
pub fn phi_grid(n: usize) -> Vec<f64> {
    let n = n.max(1);
    (0..n).map(|k| 2.0 * PI * k as f64 / n as f64).collect()
}

/// One coordinate axis of a search box.
#[derive(Clone, Copy, Debug)]
pub struct Axis {
    pub lo: f64,
    pub hi: f64,
    /// Grid spacing, used as the refinement half-width.
    pub step: f64,
    pub periodic: bool,
}

impl Axis {
    pub fn polar(n: usize) -> Axis {
        Axis {
            lo: 0.0,
            hi: PI,
            step: PI / (n.max(2) - 1) as f64,
            periodic: false,
        }
    }

    pub fn azimuth(n: usize) -> Axis {
        Axis {
            lo: 0.0,
            hi: 2.0 * PI,
            step: 2.0 * PI / n.max(1) as f64,
            periodic: true,
        }
    }

    fn bracket(&self, x: f64) -> (f64, f64) {
        if self.periodic {
            (x - self.step, x + self.step)
        } else {
            ((x - self.step).max(self.lo), (x + self.step).min(self.hi))
        }
    }
}

/// One pass of coordinate-wise golden refinement around `start`.
/// Never returns a worse point than `start`.
pub fn refine(f: impl Fn(&[f64]) -> f64, axes: &[Axis], start: &[f64], start_value: f64) -> (Vec<f64>, f64) {
    let mut x = start.to_vec();
    let mut best = start_value;
    for (k, axis) in axes.iter().enumerate() {
        let (lo, hi) = axis.bracket(x[k]);
        if hi <= lo {
            continue;
        }
        let mut probe = x.clone();
        let (xk, v) = golden_max(
            |s| {
                probe[k] = s;
                f(&probe)
            },
            lo,
            hi,
        );
        if v > best {
            best = v;
            x[k] = if axis.periodic { xk.rem_euclid(2.0 * PI) } else { xk };
        }
    }
    (x, best)
}
