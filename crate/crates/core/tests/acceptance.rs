//! Acceptance suite: one test per criterion, each driving the corresponding
//! verification suite at its pinned box and tolerance (everything here is
//! exact integer arithmetic, so "tolerance" means equality). Criterion 13
//! (byte-identical CLI output) lives in the CLI crate's acceptance test.

use satake::verify::{self, CheckResult};

fn run(criterion: &str, suite: &str, qs: &[u64]) {
    let results = verify::run_suite(suite, qs).unwrap_or_else(|e| {
        println!("criterion {criterion}: FAIL (suite error: {e})");
        panic!("criterion {criterion}: suite error: {e}");
    });
    report(criterion, &results);
}

fn report(criterion: &str, results: &[CheckResult]) {
    let failed: Vec<&CheckResult> = results.iter().filter(|c| !c.pass).collect();
    if failed.is_empty() {
        println!("criterion {criterion}: PASS ({} checks)", results.len());
    } else {
        println!("criterion {criterion}: FAIL");
        for c in &failed {
            println!("  {}: {}", c.name, c.detail);
        }
        panic!("criterion {criterion} failed");
    }
}

#[test]
fn criterion_01_duality_examples() {
    run("01 duality (GLn, SLn/PGLn, Sp4/SO5)", "duality", &[]);
}

#[test]
fn criterion_02_extended_dual_group() {
    run("02 extended dual group (PGL2 -> GL2 with d=det; SL2 splits)", "extended-dual", &[]);
}

#[test]
fn criterion_03_gr_dimension_and_parity() {
    run("03 Gr dimension <2rho,mu> and parity, <2rho,mu> <= 10", "dim-parity", &[]);
}

#[test]
fn criterion_04_cell_dimension() {
    run("04 affine root count = cell dimension, length <= 8, A1 A2 C2", "cells", &[]);
}

#[test]
fn criterion_05_projection_fibers() {
    run("05 projection fibers {v, vs}, length <= 8, A1 A2", "fibers", &[]);
}

#[test]
fn criterion_06_hecke_oracle_equivalence() {
    run("06 oracle = transported constants, q in {2,3,5}", "oracle", &[2, 3, 5]);
}

#[test]
fn criterion_07_satake_normalization() {
    run("07 Satake leading term and round trip", "satake", &[]);
}

#[test]
fn criterion_08_trace_homomorphism() {
    run("08 trace kernel relation and multiplicativity", "trace", &[]);
}

#[test]
fn criterion_09_commuting_square() {
    run("09 commuting square on the GL2 basis box", "square", &[]);
}

#[test]
fn criterion_10_character_ring_soundness() {
    run("10 characters: ring hom and Weyl dimension", "characters", &[]);
}

#[test]
fn criterion_11_q_analog_specialization() {
    run("11 q-analog specialization, support, positivity", "qanalog", &[]);
}

#[test]
fn criterion_12_restriction_identity() {
    run("12 restriction identity for PGL2 and SL2", "restriction", &[]);
}
