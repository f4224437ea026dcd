use std::ops::RangeInclusive;

use serde::Serialize;

use super::{observe_sign, tripartite_family, Observed, DEFAULT_SIGN_TOL};
use crate::error::{Error, Result};
use crate::poly::{case1_factors, case3_h_value, largest_real_root, tripartite_g, tripartite_h};

const MAX_CASE_PARAM: i64 = 50;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CaseRow {
    pub case: u8,
    pub i: i64,
    pub t: i64,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CaseReport {
    pub rows: Vec<CaseRow>,
}

impl CaseReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseRow> {
        self.rows.iter().filter(|r| !r.passed)
    }
}

fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * (1.0 + a.abs().max(b.abs()))
}

/// Sign of `E(K_{1,i,t} - e) - E(K_{1,i,t})` from eigen-solves.
fn observed(i: i64, t: i64) -> Result<Observed> {
    let (spec, locus) = tripartite_family((1 + i + t) as usize, i as usize)?;
    Ok(observe_sign(&spec, locus, DEFAULT_SIGN_TOL)?.observed)
}

fn case1(t: i64) -> Result<CaseRow> {
    let (h1, h2) = case1_factors(t);
    let h = tripartite_h(2, t);
    let factored = h1.checked_mul(&h2)? == h;
    let tau_g = largest_real_root(&tripartite_g(2, t).to_f64())?;
    let tau1 = largest_real_root(&h1.to_f64())?;
    let tau2 = largest_real_root(&h2.to_f64())?;
    let obs = observed(2, t)?;
    let passed = factored && tau1 < tau_g && tau2 < tau_g && obs == Observed::Decrease;
    Ok(CaseRow {
        case: 1,
        i: 2,
        t,
        passed,
        detail: format!(
            "h = h1 h2: {factored}; tau(h1) = {tau1:.9}, tau(h2) = {tau2:.9}, tau(g) = {tau_g:.9}; observed {obs}"
        ),
    })
}

fn case2(t: i64) -> Result<CaseRow> {
    let g = tripartite_g(3, t).to_f64();
    let h = tripartite_h(3, t).to_f64();
    let x0 = 2.0 * ((4 * t + 3) as f64).sqrt();
    let g_x0 = g.eval(x0);
    let tau_g = largest_real_root(&g)?;
    let h_tau = h.eval(tau_g);
    let obs = observed(3, t)?;
    let passed = close(g_x0, -48.0 * t as f64, 1e-10) && h_tau < 0.0 && obs == Observed::Increase;
    Ok(CaseRow {
        case: 2,
        i: 3,
        t,
        passed,
        detail: format!("g(2 sqrt(4t+3)) = {g_x0:.9}; h(tau(g)) = {h_tau:.9}; observed {obs}"),
    })
}

fn case3(i: i64) -> Result<CaseRow> {
    let tau_g = largest_real_root(&tripartite_g(i, 1).to_f64())?;
    let closed = 1.0 + ((1 + 8 * i) as f64).sqrt();
    let h_closed = tripartite_h(i, 1).to_f64().eval(closed);
    let formula = case3_h_value(i);
    let obs = observed(i, 1)?;
    let passed = close(tau_g, closed, 1e-12)
        && close(h_closed, formula, 1e-10)
        && formula < 0.0
        && obs == Observed::Increase;
    Ok(CaseRow {
        case: 3,
        i,
        t: 1,
        passed,
        detail: format!(
            "tau(g) = {tau_g:.9} vs 1 + sqrt(1+8i) = {closed:.9}; h = {h_closed:.6} vs {formula:.6}; observed {obs}"
        ),
    })
}

/// Replays the three tripartite case analyses for every `(i, t)` in range
/// that falls in one of them: `i = 2`, `i = 3` with `t >= 2`, and `t = 1`
/// with `i >= 3`.
pub fn verify_case_analyses(i_range: RangeInclusive<i64>, t_range: RangeInclusive<i64>) -> Result<CaseReport> {
    for (name, r) in [("i", &i_range), ("t", &t_range)] {
        if *r.start() < 1 || *r.end() > MAX_CASE_PARAM {
            return Err(Error::OutOfRange(format!(
                "{name} range must lie within [1, {MAX_CASE_PARAM}]"
            )));
        }
    }
    let mut rows = Vec::new();
    for i in i_range {
        for t in t_range.clone() {
            let row = match (i, t) {
                (2, t) => case1(t)?,
                (3, t) if t >= 2 => case2(t)?,
                (i, 1) if i >= 3 => case3(i)?,
                _ => continue,
            };
            rows.push(row);
        }
    }
    Ok(CaseReport { rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_cases_pass_in_range() {
        let r = verify_case_analyses(1..=12, 1..=12).unwrap();
        // 12 rows with i = 2, 11 with i = 3 and t >= 2, 10 with t = 1 and i >= 3
        assert_eq!(r.rows.len(), 33);
        assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
    }

    #[test]
    fn documented_values() {
        let row = case2(2).unwrap();
        assert!(row.detail.starts_with("g(2 sqrt(4t+3)) = -96.000000000"), "{}", row.detail);
        let row = case3(3).unwrap();
        assert!(row.detail.contains("h = -448.000000"), "{}", row.detail);
        let row = case1(3).unwrap();
        assert!(row.passed && row.detail.ends_with("observed decrease"));
    }

    #[test]
    fn range_guard() {
        assert!(verify_case_analyses(0..=3, 1..=3).is_err());
        assert!(verify_case_analyses(1..=3, 1..=51).is_err());
    }
}
