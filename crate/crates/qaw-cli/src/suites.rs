//! Suite orchestration: each suite samples its parameter points per seed,
//! runs the corresponding kernel batteries, and times each call.

use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use qaw_core::qcore::point::{
    aux_rats, sample_big_plain, sample_point_with, sample_tridiag_little,
};
use qaw_core::{qjacobi, tridiag, uqsl2, Check, ParamPoint, Profile};

use crate::report::{point_digest, Document, VerificationReport};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Uqsl2,
    Aw,
    Equitable,
    Little,
    Big,
    Tridiag,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Uqsl2,
        Suite::Aw,
        Suite::Equitable,
        Suite::Little,
        Suite::Big,
        Suite::Tridiag,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Uqsl2 => "uqsl2",
            Suite::Aw => "aw",
            Suite::Equitable => "equitable",
            Suite::Little => "little",
            Suite::Big => "big",
            Suite::Tridiag => "tridiag",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "uqsl2" => Ok(Suite::Uqsl2),
            "aw" => Ok(Suite::Aw),
            "equitable" => Ok(Suite::Equitable),
            "little" => Ok(Suite::Little),
            "big" => Ok(Suite::Big),
            "tridiag" => Ok(Suite::Tridiag),
            other => Err(format!(
                "unknown suite '{other}' (expected all, uqsl2, aw, equitable, little, big, tridiag)"
            )),
        }
    }
}

/// "all" or a comma-separated subset of suite names.
pub fn parse_suites(s: &str) -> Result<Vec<Suite>, String> {
    if s.trim() == "all" {
        return Ok(Suite::ALL.to_vec());
    }
    s.split(',')
        .map(|part| Suite::from_str(part.trim()))
        .collect()
}

/// Comma-separated non-empty list of seeds.
pub fn parse_seeds(s: &str) -> Result<Vec<u64>, String> {
    let seeds: Result<Vec<u64>, _> = s
        .split(',')
        .map(|part| part.trim().parse::<u64>())
        .collect();
    match seeds {
        Ok(v) if !v.is_empty() => Ok(v),
        Ok(_) => Err("empty seed list".to_owned()),
        Err(e) => Err(format!("invalid seed list '{s}': {e}")),
    }
}

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub suites: Vec<Suite>,
    pub seeds: Vec<u64>,
    pub n_max: u32,
    /// Corrupt one tridiagonalization coefficient; the run must then fail.
    pub corrupt_tridiag: bool,
}

struct Collector {
    reports: Vec<VerificationReport>,
}

impl Collector {
    /// Runs one timed verification call against one sampled point.
    fn batch(
        &mut self,
        suite: Suite,
        prefix: &str,
        seed: u64,
        point: &ParamPoint,
        run: impl FnOnce() -> Vec<Check>,
    ) {
        let digest = point_digest(point);
        let start = Instant::now();
        let checks = run();
        let elapsed_ms = start.elapsed().as_millis() as u64;
        for check in &checks {
            self.reports.push(VerificationReport::from_check(
                suite.name(),
                prefix,
                seed,
                &digest,
                elapsed_ms,
                check,
            ));
        }
    }
}

pub fn run_verify(opts: &RunOptions) -> Document {
    let n_max = opts.n_max;
    let mut col = Collector {
        reports: Vec::new(),
    };
    for &suite in &opts.suites {
        for &seed in &opts.seeds {
            run_suite(&mut col, suite, seed, n_max, opts.corrupt_tridiag);
        }
    }
    let invocation = serde_json::json!({
        "command": "verify",
        "suites": opts.suites.iter().map(|s| s.name()).collect::<Vec<_>>(),
        "seeds": opts.seeds,
        "n_max": n_max,
        "corrupt_tridiag": opts.corrupt_tridiag,
    });
    Document::new(invocation, col.reports)
}

fn run_suite(col: &mut Collector, suite: Suite, seed: u64, n_max: u32, corrupt: bool) {
    match suite {
        Suite::Uqsl2 => {
            let p = Arc::new(sample_point_with(seed, Profile::General, n_max));
            col.batch(suite, "", seed, &p, || uqsl2::verify_chevalley(&p));
            col.batch(suite, "", seed, &p, || uqsl2::verify_casimir(&p));
        }
        Suite::Aw => {
            let p = Arc::new(sample_point_with(seed, Profile::General, n_max));
            col.batch(suite, "", seed, &p, || uqsl2::verify_gtable(&p));
            col.batch(suite, "", seed, &p, || uqsl2::verify_aw(&p));
            let pl = Arc::new(sample_point_with(seed, Profile::Little, n_max));
            col.batch(suite, "little/", seed, &pl, || uqsl2::verify_reduced(&pl));
            let pb = Arc::new(sample_point_with(seed, Profile::Big, n_max));
            col.batch(suite, "big/", seed, &pb, || uqsl2::verify_reduced(&pb));
        }
        Suite::Equitable => {
            let p = Arc::new(sample_point_with(seed, Profile::Equitable, n_max));
            col.batch(suite, "", seed, &p, || uqsl2::verify_equitable_xyz(&p));
            col.batch(suite, "", seed, &p, || uqsl2::verify_equitable_aw(&p));
            col.batch(suite, "", seed, &p, || uqsl2::verify_chevalley_forms(&p));
        }
        Suite::Little => {
            let p = Arc::new(sample_point_with(seed, Profile::Little, n_max));
            col.batch(suite, "", seed, &p, || uqsl2::verify_gtable(&p));
            col.batch(suite, "", seed, &p, || {
                qjacobi::verify_little_dictionary(&p)
            });
            col.batch(suite, "", seed, &p, || qjacobi::verify_w0_eigen(&p, n_max));
            col.batch(suite, "", seed, &p, || {
                qjacobi::verify_little_family(&p, n_max)
            });
        }
        Suite::Big => {
            let p = Arc::new(sample_point_with(seed, Profile::Big, n_max));
            col.batch(suite, "", seed, &p, || uqsl2::verify_gtable(&p));
            col.batch(suite, "", seed, &p, || {
                qjacobi::verify_big_rescaled(&p, n_max)
            });
            col.batch(suite, "", seed, &p, || {
                qjacobi::verify_little_from_big(&p, n_max)
            });
            let pp = Arc::new(sample_big_plain(seed, n_max));
            col.batch(suite, "", seed, &pp, || {
                qjacobi::verify_big_plain(&pp, n_max)
            });
        }
        Suite::Tridiag => {
            let p = Arc::new(sample_point_with(seed, Profile::Equitable, n_max));
            if corrupt {
                col.batch(suite, "", seed, &p, || {
                    tridiag::verify_tridiag_ab_corrupted(&p)
                });
            } else {
                col.batch(suite, "", seed, &p, || tridiag::verify_tridiag_ab(&p));
            }
            col.batch(suite, "", seed, &p, || tridiag::verify_reduction_tables(&p));
            let pl = Arc::new(sample_tridiag_little(seed, n_max));
            let aux = aux_rats(seed, 3);
            col.batch(suite, "", seed, &pl, || {
                tridiag::verify_big_from_little(&pl, &aux[0], &aux[1], &aux[2])
            });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(Suite::from_str(s.name()), Ok(s));
        }
    }

    #[test]
    fn parse_suites_handles_all_and_lists() {
        assert_eq!(parse_suites("all").unwrap(), Suite::ALL.to_vec());
        assert_eq!(
            parse_suites("little, tridiag").unwrap(),
            vec![Suite::Little, Suite::Tridiag]
        );
        assert!(parse_suites("little,nope").is_err());
    }

    #[test]
    fn parse_seeds_accepts_lists_and_rejects_junk() {
        assert_eq!(parse_seeds("1, 2,30").unwrap(), vec![1, 2, 30]);
        assert!(parse_seeds("").is_err());
        assert!(parse_seeds("1,-2").is_err());
    }

    #[test]
    fn check_names_are_unique_per_suite_and_seed() {
        let opts = RunOptions {
            suites: Suite::ALL.to_vec(),
            seeds: vec![1],
            n_max: 2,
            corrupt_tridiag: false,
        };
        let doc = run_verify(&opts);
        let mut keys: Vec<_> = doc
            .reports
            .iter()
            .map(|r| (r.suite.clone(), r.check_name.clone(), r.seed))
            .collect();
        let before = keys.len();
        keys.sort();
        keys.dedup();
        assert_eq!(keys.len(), before, "duplicate (suite, check, seed) key");
        assert!(doc.all_pass());
    }
}
