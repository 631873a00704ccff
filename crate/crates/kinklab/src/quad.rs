//! Quadrature: periodic trapezoid sums on the grid and adaptive
//! Gauss–Kronrod quadrature for oscillatory integrals over the line.
//!
//! The oscillatory integrator is the independent oracle behind every
//! closed-form frequency identity in [`crate::distributions`], so it reports
//! an error estimate and fails loudly instead of degrading silently.

use crate::grid::{ComplexField, RealField};
use crate::{Complex, Error, Result, Scalar};

/// Default boundary-decay threshold for grid quadrature.
pub const BOUNDARY_MASS_THRESHOLD: Scalar = 1e-10;

/// Result of a grid quadrature together with the boundary-decay check.
#[derive(Debug, Clone, Copy)]
pub struct GridQuad {
    pub value: Scalar,
    /// Largest sample magnitude near the domain edges.
    pub boundary_mass: Scalar,
}

impl GridQuad {
    pub fn boundary_ok(&self) -> bool {
        self.boundary_mass <= BOUNDARY_MASS_THRESHOLD
    }
}

/// Trapezoidal (= spectrally accurate periodic) sum h·Σ f(x_j).
pub fn quadrature(f: &RealField) -> GridQuad {
    GridQuad {
        value: f.grid().spacing() * f.values().iter().sum::<Scalar>(),
        boundary_mass: f.boundary_mass(),
    }
}

/// Complex-valued grid quadrature.
pub fn quadrature_complex(f: &ComplexField) -> Complex {
    f.grid().spacing() * f.values().iter().sum::<Complex>()
}

/// L² inner product Re ∫ f ḡ of complex grid data.
pub fn inner_complex(f: &ComplexField, g: &ComplexField) -> Scalar {
    assert_eq!(f.grid(), g.grid());
    f.grid().spacing()
        * f.values()
            .iter()
            .zip(g.values())
            .map(|(a, b)| (a * b.conj()).re)
            .sum::<Scalar>()
}

// Gauss–Kronrod 7–15 nodes on [0, 1] of |x|; weights from the standard tables.
const XGK: [Scalar; 8] = [
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
    0.000000000000000,
];
const WGK: [Scalar; 8] = [
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,
];
const WG: [Scalar; 4] = [
    0.129484966168870,
    0.279705391489277,
    0.381830050505119,
    0.417959183673469,
];

/// One Gauss–Kronrod 7–15 panel for a complex integrand; returns (value, error).
fn gk15(f: &dyn Fn(Scalar) -> Complex, a: Scalar, b: Scalar) -> (Complex, Scalar) {
    let c = 0.5 * (a + b);
    let hw = 0.5 * (b - a);
    let fc = f(c);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for j in 0..7 {
        let dx = hw * XGK[j];
        let fsum = f(c - dx) + f(c + dx);
        kronrod += WGK[j] * fsum;
        if j % 2 == 1 {
            gauss += WG[j / 2] * fsum;
        }
    }
    kronrod *= hw;
    gauss *= hw;
    ((kronrod), (kronrod - gauss).norm())
}

/// Value and error estimate of an adaptive oscillatory integral.
#[derive(Debug, Clone, Copy)]
pub struct OscIntegral {
    pub value: Complex,
    pub error: Scalar,
    pub panels: usize,
}

/// Maximum number of panel bisections before the integrator gives up.
pub const OSC_PANEL_BUDGET: usize = 4000;

/// ∫ e^{ixζ} g(x) dx over [−half_width, half_width] by adaptive panels.
///
/// The integrand must decay below roundoff at ±half_width. Initial panels are
/// sized to resolve the oscillation e^{ixζ}; each panel is bisected until the
/// summed error estimate is below `tol`, or the panel budget is exhausted
/// (which is a hard error, not a degraded answer).
pub fn oscillatory_quadrature(
    g: &dyn Fn(Scalar) -> Complex,
    zeta: Scalar,
    half_width: Scalar,
    tol: Scalar,
) -> Result<OscIntegral> {
    let f = move |x: Scalar| Complex::from_polar(1.0, x * zeta) * g(x);
    adaptive_complex(&f, -half_width, half_width, zeta, tol)
}

/// Adaptive Gauss–Kronrod integral of a complex integrand with an oscillation
/// hint `osc_freq` used to size the initial panels.
pub fn adaptive_complex(
    f: &dyn Fn(Scalar) -> Complex,
    a: Scalar,
    b: Scalar,
    osc_freq: Scalar,
    tol: Scalar,
) -> Result<OscIntegral> {
    // ≥ 4 panels per oscillation period, at least 16 panels overall
    let periods = (b - a) * osc_freq.abs() / (2.0 * Scalar::from(std::f64::consts::PI));
    let n0 = ((4.0 * periods).ceil() as usize).clamp(16, 1024);
    let mut heap: std::collections::BinaryHeap<Panel> = std::collections::BinaryHeap::new();
    let mut total = Complex::new(0.0, 0.0);
    let mut total_err: Scalar = 0.0;
    let w = (b - a) / n0 as Scalar;
    for j in 0..n0 {
        let pa = a + j as Scalar * w;
        let pb = if j == n0 - 1 { b } else { pa + w };
        let (v, e) = gk15(f, pa, pb);
        total += v;
        total_err += e;
        heap.push(Panel { a: pa, b: pb, err: e });
    }
    let mut panels = n0;
    while total_err > tol && panels < OSC_PANEL_BUDGET {
        let worst = heap.pop().expect("heap non-empty");
        let mid = 0.5 * (worst.a + worst.b);
        let (v1, e1) = gk15(f, worst.a, mid);
        let (v2, e2) = gk15(f, mid, worst.b);
        // replace the parent's contribution
        let (vp, _) = gk15(f, worst.a, worst.b);
        total += v1 + v2 - vp;
        total_err += e1 + e2 - worst.err;
        heap.push(Panel { a: worst.a, b: mid, err: e1 });
        heap.push(Panel { a: mid, b: worst.b, err: e2 });
        panels += 1;
    }
    if total_err > tol {
        return Err(Error::QuadratureBudget {
            requested: tol,
            achieved: total_err,
            panels,
        });
    }
    Ok(OscIntegral {
        value: total,
        error: total_err,
        panels,
    })
}

/// Gauss–Legendre nodes and weights on [−1, 1] by Newton iteration on P_n.
/// Cached per order (composite rules rebuild panels frequently).
pub fn gauss_legendre(n: usize) -> (Vec<Scalar>, Vec<Scalar>) {
    thread_local! {
        static CACHE: RefCell<std::collections::HashMap<usize, (Vec<Scalar>, Vec<Scalar>)>> =
            RefCell::new(std::collections::HashMap::new());
    }
    CACHE.with(|c| {
        c.borrow_mut()
            .entry(n)
            .or_insert_with(|| gauss_legendre_uncached(n))
            .clone()
    })
}

use std::cell::RefCell;

fn gauss_legendre_uncached(n: usize) -> (Vec<Scalar>, Vec<Scalar>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Chebyshev-based initial guess
        let mut x = (std::f64::consts::PI * (i as Scalar + 0.75) / (n as Scalar + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // evaluate P_n and P_n' by the three-term recurrence
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let kf = k as Scalar;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = n as Scalar * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

/// Affine map of Gauss–Legendre data to [a, b].
pub fn gauss_legendre_on(n: usize, a: Scalar, b: Scalar) -> (Vec<Scalar>, Vec<Scalar>) {
    let (x, w) = gauss_legendre(n);
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    (
        x.iter().map(|&t| mid + half * t).collect(),
        w.iter().map(|&t| half * t).collect(),
    )
}

/// Composite Gauss rule on [a, b] split at the interior `breaks` (non-smooth
/// points of the integrand), `n` nodes per panel.
pub fn composite_gauss(
    n: usize,
    a: Scalar,
    b: Scalar,
    breaks: &[Scalar],
) -> (Vec<Scalar>, Vec<Scalar>) {
    let mut cuts: Vec<Scalar> = breaks
        .iter()
        .copied()
        .filter(|&c| c > a && c < b)
        .collect();
    cuts.sort_by(|p, q| p.partial_cmp(q).unwrap());
    cuts.dedup();
    let mut nodes = Vec::new();
    let mut weights = Vec::new();
    let mut lo = a;
    for hi in cuts.into_iter().chain(std::iter::once(b)) {
        let (x, w) = gauss_legendre_on(n, lo, hi);
        nodes.extend(x);
        weights.extend(w);
        lo = hi;
    }
    (nodes, weights)
}

struct Panel {
    a: Scalar,
    b: Scalar,
    err: Scalar,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.err
            .partial_cmp(&other.err)
            .unwrap_or(std::cmp::Ordering::Equal)
    }
}
