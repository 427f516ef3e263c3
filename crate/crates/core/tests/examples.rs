//! Every example must run to completion.

#[allow(dead_code)]
#[path = "../examples/a1_isomorphism.rs"]
mod a1_isomorphism;

#[allow(dead_code)]
#[path = "../examples/a2_solver.rs"]
mod a2_solver;

#[allow(dead_code)]
#[path = "../examples/cartan.rs"]
mod cartan;

#[allow(dead_code)]
#[path = "../examples/cli_roundtrip.rs"]
mod cli_roundtrip;

#[allow(dead_code)]
#[path = "../examples/cyclotomic.rs"]
mod cyclotomic;

#[allow(dead_code)]
#[path = "../examples/gromov_witten.rs"]
mod gromov_witten;

#[allow(dead_code)]
#[path = "../examples/mckay_graphs.rs"]
mod mckay_graphs;

#[allow(dead_code)]
#[path = "../examples/orbifold_ring.rs"]
mod orbifold_ring;

#[allow(dead_code)]
#[path = "../examples/quantum_product.rs"]
mod quantum_product;

#[allow(dead_code)]
#[path = "../examples/reconcile.rs"]
mod reconcile;

#[allow(dead_code)]
#[path = "../examples/resolution_ring.rs"]
mod resolution_ring;

#[test]
fn a1_isomorphism_runs() {
    a1_isomorphism::run_example().unwrap();
}

#[test]
fn a2_solver_runs() {
    a2_solver::run_example().unwrap();
}

#[test]
fn cartan_runs() {
    cartan::run_example().unwrap();
}

#[test]
fn cli_roundtrip_runs() {
    cli_roundtrip::run_example().unwrap();
}

#[test]
fn cyclotomic_runs() {
    cyclotomic::run_example().unwrap();
}

#[test]
fn gromov_witten_runs() {
    gromov_witten::run_example().unwrap();
}

#[test]
fn mckay_graphs_runs() {
    mckay_graphs::run_example().unwrap();
}

#[test]
fn orbifold_ring_runs() {
    orbifold_ring::run_example().unwrap();
}

#[test]
fn quantum_product_runs() {
    quantum_product::run_example().unwrap();
}

#[test]
fn reconcile_runs() {
    reconcile::run_example().unwrap();
}

#[test]
fn resolution_ring_runs() {
    resolution_ring::run_example().unwrap();
}
