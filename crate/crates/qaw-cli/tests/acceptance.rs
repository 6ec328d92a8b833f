//! Acceptance battery: one test per shipping criterion, each printing a
//! pass line on success. Every identity must hold with exactly zero
//! residual; there are no tolerances anywhere in this file.

use std::process::{Command, Stdio};
use std::sync::{Arc, Mutex};
use std::time::{Duration, Instant};

use qaw_core::qcore::point::{aux_rats, sample_point_with, sample_tridiag_little};
use qaw_core::{qjacobi, tridiag, uqsl2, Check, Profile};

const SEEDS: [u64; 3] = [1, 2, 3];
const N_MAX: u32 = 10;

// Wall-clock assertions need the machine to themselves; every criterion
// takes this lock so the timed ones never contend with sibling tests.
static GATE: Mutex<()> = Mutex::new(());

fn gate() -> std::sync::MutexGuard<'static, ()> {
    GATE.lock().unwrap_or_else(|e| e.into_inner())
}

fn assert_all(context: &str, checks: &[Check]) {
    for c in checks {
        assert!(
            c.pass,
            "{context}: check '{}' failed with residual: {}",
            c.name, c.residual
        );
        assert!(
            c.residual.is_empty(),
            "{context}: '{}' passed with residual text",
            c.name
        );
    }
    assert!(!checks.is_empty(), "{context}: empty battery");
}

fn find<'a>(checks: &'a [Check], name: &str) -> &'a Check {
    checks
        .iter()
        .find(|c| c.name == name)
        .unwrap_or_else(|| panic!("missing check '{name}'"))
}

#[test]
fn criterion_1_chevalley_relations_and_casimir() {
    let _g = gate();
    let start = Instant::now();
    for seed in SEEDS {
        let p = Arc::new(sample_point_with(seed, Profile::General, N_MAX));
        assert_all("chevalley", &uqsl2::verify_chevalley(&p));
        assert_all("casimir", &uqsl2::verify_casimir(&p));
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(1),
        "took {elapsed:?}, budget 1s"
    );
    println!("acceptance criterion 1: PASS");
}

#[test]
fn criterion_2_g1_coefficient_table() {
    let _g = gate();
    for seed in SEEDS {
        let p = Arc::new(sample_point_with(seed, Profile::General, N_MAX));
        let checks = uqsl2::verify_gtable(&p);
        find(&checks, "g1-reconstruction");
        assert_all("g-table", &checks);
    }
    println!("acceptance criterion 2: PASS");
}

#[test]
fn criterion_3_askey_wilson_closure() {
    let _g = gate();
    for seed in SEEDS {
        let p = Arc::new(sample_point_with(seed, Profile::General, N_MAX));
        assert_all("closure", &uqsl2::verify_aw(&p));
    }
    for profile in [Profile::Little, Profile::Big] {
        for seed in SEEDS {
            let p = Arc::new(sample_point_with(seed, profile, N_MAX));
            assert_all("reduced closure", &uqsl2::verify_reduced(&p));
        }
    }
    println!("acceptance criterion 3: PASS");
}

#[test]
fn criterion_4_equitable_presentation() {
    let _g = gate();
    for seed in SEEDS {
        let p = Arc::new(sample_point_with(seed, Profile::Equitable, N_MAX));
        assert_all("xyz relations", &uqsl2::verify_equitable_xyz(&p));
        assert_all("abc relations", &uqsl2::verify_equitable_aw(&p));
        assert_all("chevalley forms", &uqsl2::verify_chevalley_forms(&p));
    }
    println!("acceptance criterion 4: PASS");
}

#[test]
fn criterion_5_little_family_three_routes() {
    let _g = gate();
    for seed in SEEDS {
        let p = Arc::new(sample_point_with(seed, Profile::Little, N_MAX));
        let checks = qjacobi::verify_little_family(&p, N_MAX);
        find(&checks, "little-eigen-equation");
        find(&checks, "little-qdiff-eigen");
        find(&checks, "little-three-routes");
        assert_all("little family", &checks);
    }
    println!("acceptance criterion 5: PASS");
}

#[test]
fn criterion_6_eigenfunctions_and_bidiagonal_action() {
    let _g = gate();
    for seed in SEEDS {
        let p = Arc::new(sample_point_with(seed, Profile::Little, N_MAX));
        assert_all("w0 eigen", &qjacobi::verify_w0_eigen(&p, N_MAX));
        let little = qjacobi::verify_little_family(&p, N_MAX);
        assert!(find(&little, "little-bidiagonal-action").pass);

        let pb = Arc::new(sample_point_with(seed, Profile::Big, N_MAX));
        let big = qjacobi::verify_big_rescaled(&pb, N_MAX);
        assert!(find(&big, "big-bidiagonal-action").pass);
        assert!(find(&big, "big-w0-eigenfunctions").pass);
    }
    println!("acceptance criterion 6: PASS");
}

#[test]
fn criterion_7_big_family_and_specialization() {
    let _g = gate();
    for seed in SEEDS {
        let p = Arc::new(sample_point_with(seed, Profile::Big, N_MAX));
        let checks = qjacobi::verify_big_rescaled(&p, N_MAX);
        find(&checks, "big-qdiff-eigen");
        find(&checks, "big-eigen-equation");
        assert_all("big family", &checks);
        assert_all(
            "little from big",
            &qjacobi::verify_little_from_big(&p, N_MAX),
        );
    }
    println!("acceptance criterion 7: PASS");
}

#[test]
fn criterion_8_tridiagonalization() {
    let _g = gate();
    for seed in SEEDS {
        let p = Arc::new(sample_point_with(seed, Profile::Equitable, N_MAX));
        let ab = tridiag::verify_tridiag_ab(&p);
        find(&ab, "tridiagonal-perturbation-detected");
        assert_all("tridiagonal pair", &ab);
        assert_all("reduction tables", &tridiag::verify_reduction_tables(&p));

        let pl = Arc::new(sample_tridiag_little(seed, N_MAX));
        let aux = aux_rats(seed, 3);
        let lift = tridiag::verify_big_from_little(&pl, &aux[0], &aux[1], &aux[2]);
        find(&lift, "lift-constraint-forces-a");
        find(&lift, "lift-alpha-negative-control");
        assert_all("lift", &lift);
    }
    // Corrupting one coefficient must be caught, with a nonzero residual.
    let p = Arc::new(sample_point_with(1, Profile::Equitable, N_MAX));
    let corrupted = tridiag::verify_tridiag_ab_corrupted(&p);
    let caught = corrupted
        .iter()
        .find(|c| !c.pass)
        .expect("corruption went undetected");
    assert!(!caught.residual.is_empty());
    println!("acceptance criterion 8: PASS");
}

#[test]
fn criterion_9_end_to_end_binary() {
    let _g = gate();
    let start = Instant::now();
    let status = Command::new(env!("CARGO_BIN_EXE_qaw"))
        .args([
            "verify", "--suite", "all", "--seeds", "1,2,3", "--n-max", "10",
        ])
        .stdout(Stdio::null())
        .status()
        .expect("spawning qaw");
    let elapsed = start.elapsed();
    assert!(status.success(), "verify exited with {status}");
    assert!(
        elapsed < Duration::from_secs(60),
        "took {elapsed:?}, budget 60s"
    );
    println!("acceptance criterion 9: PASS");
}
