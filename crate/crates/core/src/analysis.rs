//! Numerical verification of uninorm axioms, class membership, idempotent
//! sets, sections, underlying operators and discontinuity loci.
//!
//! Everything here is a pure function of the operator and its parameters;
//! witnesses are reduced deterministically (smallest lexicographic wins).

use crate::error::CoreError;
use crate::operator::Operator;
use crate::pseudo::{PseudoFunction, PseudoPoint};

/// One axiom check: the largest violation found on the grid, where it
/// happened, and whether it stays under the tolerance.
#[derive(Clone, Debug)]
pub struct AxiomCheck {
    pub max_violation: f64,
    pub witness: Vec<f64>,
    pub pass: bool,
}

impl AxiomCheck {
    fn new(max_violation: f64, witness: Vec<f64>, tol: f64) -> Self {
        AxiomCheck {
            max_violation,
            witness,
            pass: max_violation <= tol,
        }
    }
}

#[derive(Clone, Debug)]
pub struct AxiomReport {
    pub commutativity: AxiomCheck,
    pub monotonicity: AxiomCheck,
    pub associativity: AxiomCheck,
    pub neutrality: AxiomCheck,
    pub annihilator: AxiomCheck,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.commutativity.pass
            && self.monotonicity.pass
            && self.associativity.pass
            && self.neutrality.pass
            && self.annihilator.pass
    }
}

fn grid(n: usize) -> impl Iterator<Item = f64> + Clone {
    (0..n).map(move |i| i as f64 / (n - 1) as f64)
}

/// Check commutativity, monotonicity, associativity, neutrality and the
/// annihilator on a uniform grid (grid^3 for associativity).
pub fn axiom_report(op: &Operator, grid_n: usize, tol: f64) -> AxiomReport {
    assert!(grid_n >= 3);
    let xs: Vec<f64> = grid(grid_n).collect();
    let n = xs.len();

    // U on the grid, reused by the associativity scan
    let mut table = vec![0.0; n * n];
    for (i, &x) in xs.iter().enumerate() {
        for (j, &y) in xs.iter().enumerate() {
            table[i * n + j] = op.eval(x, y);
        }
    }

    let mut comm = (0.0_f64, vec![0.0, 0.0]);
    for i in 0..n {
        for j in 0..n {
            let v = (table[i * n + j] - table[j * n + i]).abs();
            if v > comm.0 {
                comm = (v, vec![xs[i], xs[j]]);
            }
        }
    }

    let mut mono = (0.0_f64, vec![0.0, 0.0]);
    for j in 0..n {
        for i in 1..n {
            let v = table[(i - 1) * n + j] - table[i * n + j];
            if v > mono.0 {
                mono = (v, vec![xs[i], xs[j]]);
            }
        }
    }

    let mut assoc = (0.0_f64, vec![0.0, 0.0, 0.0]);
    for i in 0..n {
        for j in 0..n {
            let xy = table[i * n + j];
            for k in 0..n {
                let left = op.eval(xy, xs[k]);
                let right = op.eval(xs[i], op.eval(xs[j], xs[k]));
                let v = (left - right).abs();
                if v > assoc.0 {
                    assoc = (v, vec![xs[i], xs[j], xs[k]]);
                }
            }
        }
    }

    let e = op.neutral();
    let mut neut = (0.0_f64, vec![0.0, e]);
    for &x in &xs {
        let v = (op.eval(x, e) - x).abs();
        if v > neut.0 {
            neut = (v, vec![x, e]);
        }
    }

    let ann_value = op.eval(1.0, 0.0);
    let ann_violation = ann_value.min(1.0 - ann_value).max(0.0);

    AxiomReport {
        commutativity: AxiomCheck::new(comm.0, comm.1, tol),
        monotonicity: AxiomCheck::new(mono.0, mono.1, tol),
        associativity: AxiomCheck::new(assoc.0, assoc.1, tol),
        neutrality: AxiomCheck::new(neut.0, neut.1, tol),
        annihilator: AxiomCheck::new(ann_violation, vec![1.0, 0.0], tol),
    }
}

/// The section u_x(z) = U(x, z) sampled on a uniform grid.
pub fn section(op: &Operator, x: f64, grid_n: usize) -> Vec<f64> {
    grid(grid_n).map(|z| op.eval(x, z)).collect()
}

/// The underlying t-norm and t-conorm: rescaled restrictions of the operator
/// to [0,e]^2 and [e,1]^2.
pub fn underlying_ops(op: &Operator) -> Result<(Operator, Operator), CoreError> {
    let e = op.neutral();
    if e <= 0.0 || e >= 1.0 {
        return Err(CoreError::NotProper(e));
    }
    let tnorm = Operator::restricted(op.clone(), 0.0, e, 1.0);
    let tconorm = Operator::restricted(op.clone(), e, 1.0, 0.0);
    Ok((tnorm, tconorm))
}

/// Detected idempotent set: a finite union of closed intervals (singletons
/// allowed) containing 0, the neutral element and 1.
#[derive(Clone, Debug)]
pub struct IdempotentReport {
    pub intervals: Vec<(f64, f64)>,
    pub tol: f64,
}

impl IdempotentReport {
    pub fn contains(&self, x: f64, eps: f64) -> bool {
        self.intervals
            .iter()
            .any(|&(lo, hi)| x >= lo - eps && x <= hi + eps)
    }

    /// Interval endpoints plus singleton points, deduplicated.
    pub fn boundary_points(&self) -> Vec<f64> {
        let mut out = Vec::new();
        for &(lo, hi) in &self.intervals {
            out.push(lo);
            if hi > lo {
                out.push(hi);
            }
        }
        out
    }
}

/// Scan |U(x,x) - x| <= tol on a grid, refine run boundaries by bisection and
/// recover isolated idempotents inside non-idempotent runs by local-maximum
/// search (U(x,x) - x is continuous and <= 0 below e, >= 0 above).
pub fn idempotent_set(op: &Operator, resolution: usize, tol: f64) -> IdempotentReport {
    assert!(resolution >= 64);
    let e = op.neutral();
    let mut intervals = Vec::new();
    if e > 0.0 {
        // below e the defect g = U(x,x) - x is <= 0
        intervals.extend(side_idempotents(op, 0.0, e, resolution, tol, -1.0));
    }
    if e < 1.0 {
        // above e the defect is >= 0
        intervals.extend(side_idempotents(op, e, 1.0, resolution, tol, 1.0));
    }
    intervals.sort_by(|p, q| p.0.total_cmp(&q.0));
    // merge touching intervals (e is shared by both sides)
    let mut merged: Vec<(f64, f64)> = Vec::new();
    for (lo, hi) in intervals {
        match merged.last_mut() {
            Some(last) if lo <= last.1 + 1e-9 => last.1 = last.1.max(hi),
            _ => merged.push((lo, hi)),
        }
    }
    IdempotentReport {
        intervals: merged,
        tol,
    }
}

/// Idempotent intervals on one side of the neutral element. `sign` is the
/// sign of the defect g on this side; the scan works with sign*g >= -tol.
fn side_idempotents(
    op: &Operator,
    lo: f64,
    hi: f64,
    resolution: usize,
    tol: f64,
    sign: f64,
) -> Vec<(f64, f64)> {
    let n = resolution;
    let xs: Vec<f64> = (0..=n)
        .map(|i| lo + (hi - lo) * i as f64 / n as f64)
        .collect();
    // defect measured towards zero: 0 at idempotents, negative elsewhere
    let g = |x: f64| -sign * (op.eval(x, x) - x);
    let gs: Vec<f64> = xs.iter().map(|&x| g(x)).collect();
    let idem: Vec<bool> = gs.iter().map(|&v| v >= -tol).collect();

    let mut intervals: Vec<(f64, f64)> = Vec::new();
    let mut i = 0;
    while i <= n {
        if idem[i] {
            let start = i;
            while i < n && idem[i + 1] {
                i += 1;
            }
            let mut left = xs[start];
            let mut right = xs[i];
            if start > 0 {
                left = refine_edge(&g, xs[start - 1], xs[start], tol);
            }
            if i < n {
                right = refine_edge(&g, xs[i + 1], xs[i], tol);
            }
            intervals.push((left, right));
            i += 1;
        } else {
            // inside a non-idempotent run: look for isolated idempotents at
            // local maxima of the defect
            let start = i;
            while i <= n && !idem[i] {
                i += 1;
            }
            let end = i; // exclusive
            for j in start.max(1)..end.min(n) {
                let prev = if j > 0 { gs[j - 1] } else { f64::NEG_INFINITY };
                let next = if j < n { gs[j + 1] } else { f64::NEG_INFINITY };
                if gs[j] >= prev && gs[j] >= next && (gs[j] > prev || gs[j] > next) {
                    let (x_star, g_star) = refine_peak(&g, xs[j - 1], xs[j + 1]);
                    if g_star >= -tol {
                        intervals.push((x_star, x_star));
                    }
                }
            }
        }
    }
    intervals.sort_by(|p, q| p.0.total_cmp(&q.0));
    intervals
}

/// Bisect the boundary of {g >= -tol} between an outside and an inside point.
fn refine_edge(g: &impl Fn(f64) -> f64, mut outside: f64, mut inside: f64, tol: f64) -> f64 {
    for _ in 0..60 {
        let mid = 0.5 * (outside + inside);
        if g(mid) >= -tol {
            inside = mid;
        } else {
            outside = mid;
        }
    }
    inside
}

/// Ternary search for the maximum of g on [lo, hi].
fn refine_peak(g: &impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> (f64, f64) {
    for _ in 0..200 {
        let m1 = lo + (hi - lo) / 3.0;
        let m2 = hi - (hi - lo) / 3.0;
        if g(m1) < g(m2) {
            lo = m1;
        } else {
            hi = m2;
        }
        if hi - lo < 1e-15 {
            break;
        }
    }
    let x = 0.5 * (lo + hi);
    (x, g(x))
}

/// Locate the discontinuities of every grid section by recursive bisection on
/// jumps exceeding `jump_threshold`, then assemble the symmetrized jump set
/// into a pseudo-function. Continuous operators yield an empty relation.
pub fn jump_locus(op: &Operator, resolution: usize, jump_threshold: f64) -> PseudoFunction {
    assert!(resolution >= 64);
    let n = resolution;
    let xs: Vec<f64> = (0..=n).map(|i| i as f64 / n as f64).collect();
    let mut hits: Vec<(f64, f64)> = Vec::new();
    for &x in &xs {
        let u = |z: f64| op.eval(x, z);
        let vals: Vec<f64> = xs.iter().map(|&z| u(z)).collect();
        for j in 1..=n {
            if vals[j] - vals[j - 1] > jump_threshold {
                locate_jumps(
                    &u,
                    xs[j - 1],
                    xs[j],
                    vals[j - 1],
                    vals[j],
                    jump_threshold,
                    40,
                    &mut |y| hits.push((x, y)),
                );
            }
        }
    }
    // the locus is symmetric
    let mut points: Vec<(f64, f64)> = hits.iter().map(|&(x, y)| (y, x)).collect();
    points.extend(hits);
    points.sort_by(|p, q| p.0.total_cmp(&q.0).then(p.1.total_cmp(&q.1)));

    // cluster into columns: x values within half a grid step collapse
    let cluster_w = 0.5 / n as f64;
    let mut columns: Vec<PseudoPoint> = Vec::new();
    let mut i = 0;
    while i < points.len() {
        let mut j = i + 1;
        while j < points.len() && points[j].0 - points[j - 1].0 <= cluster_w {
            j += 1;
        }
        let slice = &points[i..j];
        let x = slice.iter().map(|p| p.0).sum::<f64>() / slice.len() as f64;
        let y_low = slice.iter().map(|p| p.1).fold(f64::INFINITY, f64::min);
        let y_high = slice.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max);
        columns.push(PseudoPoint { x, y_low, y_high });
        i = j;
    }
    PseudoFunction::from_columns_unchecked(columns)
}

#[allow(clippy::too_many_arguments)]
fn locate_jumps(
    u: &impl Fn(f64) -> f64,
    lo: f64,
    hi: f64,
    f_lo: f64,
    f_hi: f64,
    threshold: f64,
    depth: usize,
    record: &mut impl FnMut(f64),
) {
    if depth == 0 {
        if f_hi - f_lo > threshold {
            record(0.5 * (lo + hi));
        }
        return;
    }
    let mid = 0.5 * (lo + hi);
    if mid <= lo || mid >= hi {
        // interval at float resolution
        if f_hi - f_lo > threshold {
            record(mid);
        }
        return;
    }
    let f_mid = u(mid);
    let left = f_mid - f_lo;
    let right = f_hi - f_mid;
    if left > 0.5 * threshold {
        locate_jumps(u, lo, mid, f_lo, f_mid, threshold, depth - 1, record);
    }
    if right > 0.5 * threshold {
        locate_jumps(u, mid, hi, f_mid, f_hi, threshold, depth - 1, record);
    }
}

/// The equilibrium curve r(x) = sup { y : U(x, y) < e }, located by bisection
/// per grid column. For operators continuous off a strictly decreasing curve
/// this is exactly that curve.
pub fn equilibrium_curve(op: &Operator, resolution: usize) -> PseudoFunction {
    let e = op.neutral();
    let n = resolution;
    let mut samples = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let x = i as f64 / n as f64;
        samples.push((x, equilibrium_at(op, x, e)));
    }
    PseudoFunction::from_columns_unchecked(
        samples
            .into_iter()
            .map(|(x, y)| PseudoPoint {
                x,
                y_low: y,
                y_high: y,
            })
            .collect(),
    )
}

fn equilibrium_at(op: &Operator, x: f64, e: f64) -> f64 {
    let below = |y: f64| op.eval(x, y) < e;
    if below(1.0) {
        return 1.0;
    }
    if !below(0.0) {
        return 0.0;
    }
    let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        if below(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// The curve r(x) with U(x, r(x)) = e of a representable uninorm, from the
/// generator: r(x) = g^{-1}(-g(x)).
pub fn curve_of_representable(
    gen: &crate::generator::GeneratorSpec,
) -> Result<PseudoFunction, CoreError> {
    if gen.kind() != crate::generator::GeneratorKind::Uninorm {
        return Err(CoreError::GeneratorKind {
            expected: "uninorm",
            found: gen.kind().name(),
        });
    }
    let n = 1024;
    let mut pts = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let x = i as f64 / n as f64;
        let r = gen.pseudo_inverse(-gen.eval(x)?);
        pts.push((x, r));
    }
    PseudoFunction::from_points(pts)
}

/// Class membership flags, all measured on grids at the given tolerance.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ClassFlags {
    pub conjunctive: bool,
    pub disjunctive: bool,
    /// zero row on [0,1)x{0} and one row on (0,1]x{1}
    pub in_n: bool,
    /// underlying t-norm and t-conorm continuous
    pub in_u: bool,
    /// U(x,y) in {x,y} everywhere
    pub internal: bool,
    /// internal with a continuous strictly decreasing switch curve
    pub s_internal: bool,
    pub n_min: bool,
    pub n_max: bool,
}

pub fn classify(op: &Operator, resolution: usize, tol: f64) -> ClassFlags {
    let mut flags = ClassFlags::default();
    let n = resolution;
    let ann = op.eval(1.0, 0.0);
    flags.conjunctive = ann < 0.5;
    flags.disjunctive = !flags.conjunctive;

    // N: boundary rows, endpoints excluded on the open side
    let mut in_n = true;
    for i in 0..n {
        let x = i as f64 / n as f64;
        if op.eval(x, 0.0) > tol {
            in_n = false;
            break;
        }
    }
    if in_n {
        for i in 1..=n {
            let x = i as f64 / n as f64;
            if op.eval(x, 1.0) < 1.0 - tol {
                in_n = false;
                break;
            }
        }
    }
    flags.in_n = in_n;

    // U: continuity of the underlying operators via jump scans
    let e = op.neutral();
    flags.in_u = if e > 0.0 && e < 1.0 {
        let (t, c) = underlying_ops(op).expect("proper neutral checked");
        jump_locus(&t, resolution.max(64), 1e-3).is_empty()
            && jump_locus(&c, resolution.max(64), 1e-3).is_empty()
    } else {
        jump_locus(op, resolution.max(64), 1e-3).is_empty()
    };

    // internality on the grid
    let mut internal = true;
    'outer: for i in 0..=n {
        let x = i as f64 / n as f64;
        for j in 0..=n {
            let y = j as f64 / n as f64;
            let v = op.eval(x, y);
            if (v - x).abs() > tol && (v - y).abs() > tol {
                internal = false;
                break 'outer;
            }
        }
    }
    flags.internal = internal;

    if internal {
        flags.s_internal = switch_curve(op, resolution)
            .map(|curve| curve.strictly_decreasing(SWITCH_VERTICAL_TOL))
            .unwrap_or(false);
    }

    // N_min / N_max: agreement with a fresh composite on the open square
    if flags.in_n && e > 0.0 && e < 1.0 {
        let (t, c) = underlying_ops(op).expect("proper neutral checked");
        let umin = Operator::u_min(t.clone(), c.clone(), e).expect("parts are valid");
        let umax = Operator::u_max(t, c, e).expect("parts are valid");
        flags.n_min = agrees_on_open_square(op, &umin, n, tol);
        flags.n_max = agrees_on_open_square(op, &umax, n, tol);
    }
    flags
}

/// Columns steeper than this between adjacent samples are treated as vertical
/// segments of the switch relation. Curves with slope beyond ~5 per unit may
/// be misflagged at coarse resolutions.
const SWITCH_VERTICAL_TOL: f64 = 0.05;

/// The min/max switch curve of an internal operator: per column the
/// supremum of the min region { y : U(x,y) < (x + y) / 2 }, located by
/// bisection. The midpoint comparison distinguishes min from max without
/// being fooled by the diagonal, where the two coincide.
fn switch_curve(op: &Operator, resolution: usize) -> Option<PseudoFunction> {
    let n = resolution;
    let mut pts = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let x = i as f64 / n as f64;
        let in_min = |y: f64| op.eval(x, y) < 0.5 * (x + y);
        let v = if in_min(1.0) {
            1.0
        } else if !in_min(0.0) {
            0.0
        } else {
            let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
            for _ in 0..60 {
                let mid = 0.5 * (lo + hi);
                if in_min(mid) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            0.5 * (lo + hi)
        };
        pts.push(PseudoPoint {
            x,
            y_low: v,
            y_high: v,
        });
    }
    Some(PseudoFunction::from_columns_unchecked(pts))
}

fn agrees_on_open_square(a: &Operator, b: &Operator, n: usize, tol: f64) -> bool {
    for i in 1..n {
        let x = i as f64 / n as f64;
        for j in 1..n {
            let y = j as f64 / n as f64;
            if (a.eval(x, y) - b.eval(x, y)).abs() > tol {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::GeneratorSpec;
    use crate::operator::AnnihilatorMode;
    use crate::pseudo::PseudoFunction;

    fn logratio() -> Operator {
        Operator::representable_uninorm(GeneratorSpec::logratio(), AnnihilatorMode::Conjunctive)
            .unwrap()
    }

    fn linear_s_internal() -> Operator {
        let b = PseudoFunction::from_points(vec![(0.0, 1.0), (1.0, 0.0)]).unwrap();
        Operator::s_internal(b).unwrap()
    }

    #[test]
    fn representable_axioms_hold() {
        let rep = axiom_report(&logratio(), 41, 1e-9);
        assert!(rep.all_pass(), "{rep:?}");
        assert!(rep.associativity.max_violation <= 1e-12);
    }

    #[test]
    fn min_with_wrong_neutral_fails_neutrality() {
        let mut op = Operator::min();
        // claim a neutral of 0.5: min(1, 0.5) = 0.5 != 1
        op = Operator::from_parts(op.kind().clone(), 0.5);
        let rep = axiom_report(&op, 21, 1e-9);
        assert!(!rep.neutrality.pass);
        assert_eq!(rep.neutrality.witness, vec![1.0, 0.5]);
    }

    #[test]
    fn underlying_of_representable_splitlog_is_product() {
        let u = Operator::representable_uninorm(
            GeneratorSpec::splitlog(),
            AnnihilatorMode::Disjunctive,
        )
        .unwrap();
        let (t, _) = underlying_ops(&u).unwrap();
        let product = Operator::tnorm_from_generator(GeneratorSpec::product_t()).unwrap();
        for i in 0..=50 {
            for j in 0..=50 {
                let (x, y) = (i as f64 / 50.0, j as f64 / 50.0);
                assert!((t.eval(x, y) - product.eval(x, y)).abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn idempotents_of_representable_are_trivial() {
        let rep = idempotent_set(&logratio(), 256, 1e-9);
        let pts = rep.boundary_points();
        assert!(pts.iter().any(|&p| p.abs() <= 1e-9));
        assert!(pts.iter().any(|&p| (p - 0.5).abs() <= 1e-6));
        assert!(pts.iter().any(|&p| (p - 1.0).abs() <= 1e-9));
        // nothing in the Archimedean interiors
        assert!(!rep.contains(0.25, 1e-3));
        assert!(!rep.contains(0.75, 1e-3));
    }

    #[test]
    fn s_internal_idempotents_are_everything() {
        let rep = idempotent_set(&linear_s_internal(), 128, 1e-9);
        assert_eq!(rep.intervals.len(), 1);
        let (lo, hi) = rep.intervals[0];
        assert!(lo <= 1e-9 && hi >= 1.0 - 1e-9);
    }

    #[test]
    fn jump_locus_of_continuous_tnorm_is_empty() {
        let t = Operator::tnorm_from_generator(GeneratorSpec::product_t()).unwrap();
        assert!(jump_locus(&t, 64, 1e-3).is_empty());
    }

    #[test]
    fn jump_locus_of_representable_sits_at_the_corners() {
        let locus = jump_locus(&logratio(), 128, 1e-3);
        for p in locus.points() {
            assert!(
                p.x <= 1.0 / 64.0 || p.x >= 1.0 - 1.0 / 64.0,
                "unexpected interior jump column at x = {}",
                p.x
            );
        }
    }

    #[test]
    fn jump_locus_of_s_internal_is_the_switch_curve() {
        let locus = jump_locus(&linear_s_internal(), 128, 1e-3);
        assert!(!locus.is_empty());
        for p in locus.points() {
            // jumps of size |x - y| >= threshold all lie on y = 1 - x
            assert!(
                (p.y_low - (1.0 - p.x)).abs() <= 1e-2 || (p.y_high - (1.0 - p.x)).abs() <= 1e-2,
                "jump at ({}, [{}, {}]) off the curve",
                p.x,
                p.y_low,
                p.y_high
            );
        }
    }

    #[test]
    fn curve_of_logratio_is_one_minus_x() {
        let c = curve_of_representable(&GeneratorSpec::logratio()).unwrap();
        for i in 0..=100 {
            let x = i as f64 / 100.0;
            assert!((c.value_mid(x) - (1.0 - x)).abs() <= 1e-9, "x = {x}");
        }
        let c = curve_of_representable(&GeneratorSpec::splitlog()).unwrap();
        for i in 0..=100 {
            let x = i as f64 / 100.0;
            assert!((c.value_mid(x) - (1.0 - x)).abs() <= 1e-9, "x = {x}");
        }
    }

    #[test]
    fn classify_representable() {
        let flags = classify(&logratio(), 96, 1e-9);
        assert!(flags.in_n && flags.in_u);
        assert!(!flags.internal);
        assert!(flags.conjunctive);
    }

    #[test]
    fn classify_s_internal() {
        let flags = classify(&linear_s_internal(), 96, 1e-9);
        assert!(flags.internal && flags.s_internal);
    }

    #[test]
    fn classify_umax_composite() {
        let t = Operator::tnorm_from_generator(GeneratorSpec::product_t()).unwrap();
        let c = Operator::tconorm_from_generator(GeneratorSpec::probsum_c()).unwrap();
        let umax = Operator::u_max(t, c, 0.5).unwrap();
        let flags = classify(&umax, 96, 1e-9);
        assert!(!flags.in_n); // U(x, 0) = x > 0 above the neutral
        assert!(flags.in_u);
        assert!(flags.disjunctive);
    }

    #[test]
    fn sections_are_monotone() {
        for op in [logratio(), linear_s_internal()] {
            for i in 0..=20 {
                let x = i as f64 / 20.0;
                let s = section(&op, x, 101);
                for w in s.windows(2) {
                    assert!(w[1] >= w[0] - 1e-12);
                }
            }
        }
    }
}
