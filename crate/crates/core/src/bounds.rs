//! Closed-form bound evaluators and numeric inequality checkers.
//!
//! Logarithms are natural throughout: the constants these formulas carry
//! (e·(n+1)!, 4(β+1)!, and friends) come from arguments phrased in base e.
//! The exact binomial tail is accumulated in double-double arithmetic so the
//! comparison stays trustworthy for trials in the 10⁴..10⁷ range.

use crate::error::{Error, Result};

/// One evaluated bound: a name, the parameters that went in, the value, and
/// (for checkers that compare an instance against the bound) a verdict.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub name: &'static str,
    pub inputs: Vec<(&'static str, f64)>,
    pub value: f64,
    pub satisfied: Option<bool>,
}

/// Edge budget for P_t-free graphs: `(t-2) * n / 2`. Defined for `t >= 2`.
pub fn erdos_gallai_bound(t: usize, n: usize) -> f64 {
    debug_assert!(t >= 2);
    (t as f64 - 2.0) * n as f64 / 2.0
}

/// The Zarankiewicz bound `(t-1)^{1/s} (a-s+1) b^{1-1/s} + (s-1) b` on the
/// edges of an a×b bipartite graph with no K_{s,t} oriented across the parts.
pub fn kst_bound(a: usize, b: usize, s: usize, t: usize) -> Result<f64> {
    if !(s >= 2 && a >= s) {
        return Err(Error::InvalidParameter {
            name: "a/s",
            requirement: "a >= s >= 2",
        });
    }
    if !(t >= 2 && b >= t) {
        return Err(Error::InvalidParameter {
            name: "b/t",
            requirement: "b >= t >= 2",
        });
    }
    let (a, b, s, t) = (a as f64, b as f64, s as f64, t as f64);
    Ok((t - 1.0).powf(1.0 / s) * (a - s + 1.0) * b.powf(1.0 - 1.0 / s) + (s - 1.0) * b)
}

/// Gap of the partial-exponential inequality
/// `log(1 + x + x²/2! + … + xⁿ/n!) <= x - x^{n+1}/(e(n+1)!)`
/// for `0 <= x <= 1`, `n >= 1`: returns RHS - LHS, which must be >= 0.
pub fn partial_exp_log_gap(x: f64, n: usize) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::InvalidParameter {
            name: "x",
            requirement: "0 <= x <= 1",
        });
    }
    if n < 1 {
        return Err(Error::InvalidParameter {
            name: "n",
            requirement: "n >= 1",
        });
    }
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    for i in 1..=n {
        term *= x / i as f64;
        sum += term;
    }
    let lhs = sum.ln();
    let rhs = x - x.powi(n as i32 + 1) / (std::f64::consts::E * factorial(n + 1));
    Ok(rhs - lhs)
}

/// Checks the binomial tail bound `P[Bin(t,p) <= beta] <= exp(-(tp)^{beta+1} /
/// (4(beta+1)!))` on parameters satisfying its validity window.
///
/// Preconditions, refused with a diagnostic otherwise:
/// * `1/d < t·p < 1`, and
/// * `beta·p <= (tp)^{beta+1} (1/e - 1/4) / (beta+1)!`, the slack that the
///   derivation absorbs when it trades `beta·p` against the exponent.
///
/// The report's `value` is the exact CDF; `inputs` also carries the factored
/// intermediate `(1-p)^{t-beta} · Σ_{i<=beta} (tp)^i / i!` that sits between
/// the CDF and the bound.
pub fn binomial_tail_bound_check(t: u64, p: f64, beta: usize, d: f64) -> Result<BoundReport> {
    if beta < 1 {
        return Err(Error::InvalidParameter {
            name: "beta",
            requirement: "beta >= 1",
        });
    }
    if !(0.0 < p && p < 1.0) {
        return Err(Error::InvalidParameter {
            name: "p",
            requirement: "0 < p < 1",
        });
    }
    if (t as usize) < beta {
        return Err(Error::InvalidParameter {
            name: "t",
            requirement: "t >= beta",
        });
    }
    let tp = t as f64 * p;
    if !(tp > 1.0 / d && tp < 1.0) {
        return Err(Error::PreconditionFailed(format!(
            "need 1/d < t*p < 1, got t*p = {tp} with 1/d = {}",
            1.0 / d
        )));
    }
    let slack = tp.powi(beta as i32 + 1) * (1.0 / std::f64::consts::E - 0.25)
        / factorial(beta + 1);
    if beta as f64 * p > slack {
        return Err(Error::PreconditionFailed(format!(
            "need beta*p <= (tp)^(beta+1)(1/e - 1/4)/(beta+1)!, got {} > {slack}",
            beta as f64 * p
        )));
    }

    let cdf = binomial_cdf(t, p, beta);
    let mut partial = 1.0f64;
    let mut term = 1.0f64;
    for i in 1..=beta {
        term *= tp / i as f64;
        partial += term;
    }
    let factored = Dd::from(1.0 - p).powi(t - beta as u64).hi * partial;
    let bound = (-tp.powi(beta as i32 + 1) / (4.0 * factorial(beta + 1))).exp();
    Ok(BoundReport {
        name: "binomial-tail",
        inputs: vec![
            ("t", t as f64),
            ("p", p),
            ("beta", beta as f64),
            ("d", d),
            ("factored", factored),
            ("bound", bound),
        ],
        value: cdf,
        satisfied: Some(cdf <= bound),
    })
}

/// Exact `P[Bin(t, p) <= beta]` via the term recurrence, accumulated in
/// double-double precision.
fn binomial_cdf(t: u64, p: f64, beta: usize) -> f64 {
    let q = 1.0 - p;
    let mut term = Dd::from(q).powi(t);
    let mut sum = term;
    let ratio = p / q;
    for i in 0..beta as u64 {
        term = term.mul_f64((t - i) as f64 / (i + 1) as f64).mul_f64(ratio);
        sum = sum.add(term);
    }
    sum.hi
}

/// The palette scale `(4^{beta+5}(beta+1)!)^{-1/beta} d^{1+1/beta} /
/// (log d)^{1/beta}` of the random-graph lower bound. Needs `d > 1`.
pub fn randomgraph_k(d: f64, beta: usize) -> Result<f64> {
    // the negated form also rejects NaN
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    if !(d > 1.0) {
        return Err(Error::InvalidParameter {
            name: "d",
            requirement: "d > 1",
        });
    }
    debug_assert!(beta >= 1);
    let b = beta as f64;
    let base = 4f64.powi(beta as i32 + 5) * factorial(beta + 1);
    Ok(base.powf(-1.0 / b) * d.powf(1.0 + 1.0 / b) / d.ln().powf(1.0 / b))
}

/// The girth-construction constant `(1/100)(4^{beta+5}(beta+1)!)^{-1/beta}`.
pub fn c_beta(beta: usize) -> f64 {
    debug_assert!(beta >= 1);
    let base = 4f64.powi(beta as i32 + 5) * factorial(beta + 1);
    0.01 * base.powf(-1.0 / beta as f64)
}

/// The simplified special-pair degree bound `t·Δ/(α - t)` at `α = 2t`, which
/// collapses to Δ itself.
pub fn sigma_bound_cycle(t: usize, delta: f64) -> f64 {
    debug_assert!(t >= 2 && delta >= 1.0);
    let alpha = 2 * t;
    t as f64 * delta / (alpha - t) as f64
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|i| i as f64).product()
}

/// Minimal double-double value: an unevaluated sum `hi + lo` carrying about
/// 105 bits of precision.
#[derive(Debug, Clone, Copy)]
struct Dd {
    hi: f64,
    lo: f64,
}

impl Dd {
    fn from(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    fn add(self, other: Dd) -> Dd {
        let s = self.hi + other.hi;
        let bb = s - self.hi;
        let err = (self.hi - (s - bb)) + (other.hi - bb);
        renorm(s, err + self.lo + other.lo)
    }

    fn mul_f64(self, b: f64) -> Dd {
        let p = self.hi * b;
        let err = self.hi.mul_add(b, -p);
        renorm(p, err + self.lo * b)
    }

    fn mul(self, other: Dd) -> Dd {
        let p = self.hi * other.hi;
        let err = self.hi.mul_add(other.hi, -p);
        renorm(p, err + self.hi * other.lo + self.lo * other.hi)
    }

    fn powi(self, mut n: u64) -> Dd {
        let mut base = self;
        let mut acc = Dd::from(1.0);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            n >>= 1;
        }
        acc
    }
}

fn renorm(hi: f64, lo: f64) -> Dd {
    let s = hi + lo;
    Dd {
        hi: s,
        lo: (hi - s) + lo,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn erdos_gallai_values() {
        assert_eq!(erdos_gallai_bound(2, 10), 0.0);
        assert_eq!(erdos_gallai_bound(4, 10), 10.0);
    }

    #[test]
    fn kst_values() {
        let v = kst_bound(2, 2, 2, 2).unwrap();
        assert!((v - (2f64.sqrt() + 2.0)).abs() < 1e-12);
        let w = kst_bound(5, 4, 2, 2).unwrap();
        assert!((w - 12.0).abs() < 1e-12);
        assert!(kst_bound(1, 4, 2, 2).is_err());
        assert!(kst_bound(5, 1, 2, 2).is_err());
    }

    #[test]
    fn exp_log_gap_values() {
        assert_eq!(partial_exp_log_gap(0.0, 3), Ok(0.0));
        // x = 1, n = 1: (1 - 1/(2e)) - log 2
        let expected = 1.0 - 1.0 / (2.0 * std::f64::consts::E) - 2f64.ln();
        let got = partial_exp_log_gap(1.0, 1).unwrap();
        assert!((got - expected).abs() < 1e-15);
        assert!((got - 0.1229).abs() < 1e-4);
        assert!(partial_exp_log_gap(1.5, 1).is_err());
        assert!(partial_exp_log_gap(0.5, 0).is_err());
    }

    #[test]
    fn binomial_tail_refuses_tp_outside_window() {
        // t*p = 2 violates t*p < 1
        assert!(matches!(
            binomial_tail_bound_check(1000, 0.002, 1, 10.0),
            Err(Error::PreconditionFailed(_))
        ));
        // t*p = 0.05 violates 1/d < t*p at d = 10
        assert!(matches!(
            binomial_tail_bound_check(1000, 0.00005, 1, 10.0),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn binomial_tail_holds_in_the_window() {
        let report = binomial_tail_bound_check(1000, 0.0002, 1, 10.0).unwrap();
        assert_eq!(report.satisfied, Some(true));
        // cdf <= factored <= bound along the derivation chain
        let factored = report
            .inputs
            .iter()
            .find(|(k, _)| *k == "factored")
            .unwrap()
            .1;
        let bound = report.inputs.iter().find(|(k, _)| *k == "bound").unwrap().1;
        assert!(report.value <= factored);
        assert!(factored <= bound);
    }

    #[test]
    fn binomial_cdf_matches_direct_sum_on_small_cases() {
        // cross-check with a plain f64 sum where it is trivially accurate
        for &(t, p, beta) in &[(20u64, 0.03f64, 2usize), (50, 0.01, 1), (100, 0.005, 3)] {
            let direct: f64 = (0..=beta as u64)
                .map(|i| choose(t, i) * p.powi(i as i32) * (1.0 - p).powi((t - i) as i32))
                .sum();
            let dd = binomial_cdf(t, p, beta);
            assert!((direct - dd).abs() < 1e-12, "t={t} p={p} beta={beta}");
        }
    }

    fn choose(n: u64, k: u64) -> f64 {
        (0..k).map(|i| (n - i) as f64 / (i + 1) as f64).product()
    }

    #[test]
    fn randomgraph_k_values() {
        // beta = 1, d = e: k = e^2 / 8192
        let k = randomgraph_k(std::f64::consts::E, 1).unwrap();
        let expected = std::f64::consts::E.powi(2) / 8192.0;
        assert!((k - expected).abs() < 1e-12);
        assert!(randomgraph_k(1.0, 1).is_err());
    }

    #[test]
    fn randomgraph_k_beta1_closed_form() {
        for d in [3.0f64, 10.0, 100.0, 1e4] {
            let k = randomgraph_k(d, 1).unwrap();
            assert!((k - d * d / (8192.0 * d.ln())).abs() / k < 1e-12);
        }
    }

    #[test]
    fn c_beta_values() {
        assert!((c_beta(1) - 1.0 / 819_200.0).abs() < 1e-18);
        let expected2 = 0.01 / (98_304f64).sqrt();
        assert!((c_beta(2) - expected2).abs() < 1e-12);
        // positive, and increasing over the small range: the -1/beta root of
        // the growing base tends to 1 from below
        for beta in 1..6 {
            assert!(c_beta(beta) > 0.0);
            assert!(c_beta(beta) < c_beta(beta + 1));
        }
    }

    #[test]
    fn c_beta_and_randomgraph_k_agree() {
        for beta in 1..=4 {
            for d in [2.5f64, 8.0, 64.0, 1e3] {
                let k = randomgraph_k(d, beta).unwrap();
                let via_c = 100.0 * c_beta(beta) * d.powf(1.0 + 1.0 / beta as f64)
                    / d.ln().powf(1.0 / beta as f64);
                assert!((k - via_c).abs() / k < 1e-12);
            }
        }
    }

    #[test]
    fn sigma_bound_is_delta() {
        assert_eq!(sigma_bound_cycle(2, 7.0), 7.0);
        assert_eq!(sigma_bound_cycle(5, 12.5), 12.5);
    }
}
