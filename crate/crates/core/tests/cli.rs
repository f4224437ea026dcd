//! The command-line interface, driven in-process.

use multipartite_energy::cli::{run, CSV_HEADER, VERIFY_IDS};

fn mpenergy(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("mpenergy").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn csv_sweep_has_header_and_one_row_per_case() {
    let (code, out, err) = mpenergy(&["sweep", "--nmax", "6", "--format", "csv"]);
    assert_eq!(code, 0, "{err}");
    let mut reader = csv::Reader::from_reader(out.as_bytes());
    assert_eq!(reader.headers().unwrap().iter().collect::<Vec<_>>(), CSV_HEADER);
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert!(!rows.is_empty());
    for row in &rows {
        assert_eq!(row.len(), CSV_HEADER.len());
        assert_eq!(&row[5], &row[6], "predicted vs observed in {row:?}");
    }
    assert!(err.contains(&format!("{} cases", rows.len())), "{err}");
}

#[test]
fn sweep_output_is_reproducible_and_worker_independent() {
    let base = mpenergy(&["sweep", "--nmax", "9", "--format", "csv"]);
    assert_eq!(base.0, 0);
    assert_eq!(mpenergy(&["sweep", "--nmax", "9", "--format", "csv"]).1, base.1);
    let parallel = mpenergy(&["sweep", "--nmax", "9", "--format", "csv", "--workers", "4"]);
    assert_eq!(parallel.0, 0);
    assert_eq!(parallel.1, base.1);
}

#[test]
fn json_sweep_parses() {
    let (code, out, _) = mpenergy(&["sweep", "--nmax", "5", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["summary"]["disagree"], 0);
    assert!(!v["rows"].as_array().unwrap().is_empty());
}

#[test]
fn tripartite_sweep_beyond_full_cap() {
    let (code, out, err) = mpenergy(&["sweep", "--nmax", "20", "--tripartite-only", "--format", "csv"]);
    assert_eq!(code, 0, "{err}");
    assert!(out.lines().skip(1).all(|l| l.split(',').count() >= CSV_HEADER.len()));
    assert_eq!(mpenergy(&["sweep", "--nmax", "20"]).0, 2);
}

#[test]
fn sweep_to_file() {
    let path = std::env::temp_dir().join(format!("mpenergy-sweep-{}.csv", std::process::id()));
    let p = path.to_str().unwrap();
    let (code, out, _) = mpenergy(&["sweep", "--nmax", "5", "--format", "csv", "--out", p]);
    assert_eq!(code, 0);
    assert!(out.contains("cases"));
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert!(written.starts_with(&CSV_HEADER.join(",")));
}

#[test]
fn every_verify_id_passes() {
    for id in VERIFY_IDS {
        let (code, out, err) = mpenergy(&["verify", id, "--trials", "60", "--nmax", "8"]);
        assert_eq!(code, 0, "{id}: {out}{err}");
    }
}

#[test]
fn verify_seed_is_reproducible() {
    let a = mpenergy(&["verify", "lemma2.3", "--trials", "50", "--seed", "7"]);
    let b = mpenergy(&["verify", "lemma2.3", "--trials", "50", "--seed", "7"]);
    assert_eq!(a, b);
}

#[test]
fn exit_codes() {
    assert_eq!(mpenergy(&["energy", "4,4"]).0, 0);
    assert_eq!(mpenergy(&["energy", "0,4"]).0, 2);
    assert_eq!(mpenergy(&["energy"]).0, 2);
    assert_eq!(mpenergy(&["compare", "3,2,1", "--locus", "0,9"]).0, 2);
    assert_eq!(mpenergy(&["compare", "3,2,1", "--locus", "0,1", "--sign-tol", "-1"]).0, 2);
    assert_eq!(mpenergy(&["sweep", "--format", "xml"]).0, 2);
    assert_eq!(mpenergy(&["verify", "nonsense"]).0, 2);
}
