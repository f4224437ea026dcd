//! Polynomial case analyses for the tripartite family, plus the residual
//! numerical sweeps that close the remaining small cases.

use multipartite_energy::verify::{
    lemma31_residual, lemma34_residual, lemma41_residual, verify_case_analyses, DEFAULT_SIGN_TOL,
};

fn main() -> multipartite_energy::Result<()> {
    let cases = verify_case_analyses(1..=20, 1..=20)?;
    for case in 1..=3u8 {
        let rows: Vec<_> = cases.rows.iter().filter(|r| r.case == case).collect();
        let failed = rows.iter().filter(|r| !r.passed).count();
        println!("case {case}: {} instances, {failed} failed", rows.len());
    }
    for report in [
        lemma31_residual(DEFAULT_SIGN_TOL)?,
        lemma34_residual(DEFAULT_SIGN_TOL)?,
        lemma41_residual(DEFAULT_SIGN_TOL)?,
    ] {
        println!(
            "{}: {} cases, clean = {}, min margin {:.3e}",
            report.name,
            report.summary.total,
            report.is_clean(),
            report.min_margin()
        );
    }
    Ok(())
}
