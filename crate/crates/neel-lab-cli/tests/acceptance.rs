//! One test per acceptance criterion; each prints its pass/fail line.

use neel_lab_cli::verify::{run_criterion, GoldenStore};

fn criterion(id: u32) {
    let r = run_criterion(id, &GoldenStore::from_env());
    println!("{}", r.line());
    assert!(r.passed, "{}", r.line());
}

#[test]
fn criterion_01_printed_constants() {
    criterion(1);
}

#[test]
fn criterion_02_density_normalisation() {
    criterion(2);
}

#[test]
fn criterion_03_series_against_quadrature() {
    criterion(3);
}

#[test]
fn criterion_04_arcsine_moments() {
    criterion(4);
}

#[test]
fn criterion_05_gap_and_neel_properties() {
    criterion(5);
}

#[test]
fn criterion_06_bcs_identities() {
    criterion(6);
}

#[test]
fn criterion_07_neel_asymptotes() {
    criterion(7);
}

#[test]
fn criterion_08_universality_breaking_2d() {
    criterion(8);
}

#[test]
fn criterion_09_universality_3d() {
    criterion(9);
}

#[test]
fn criterion_10_momentum_grid_oracle() {
    criterion(10);
}
