macro_rules! example {
    ($name:ident, $file:literal) => {
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(distances, "distances.rs");
example!(verify_certificates, "verify_certificates.rs");
example!(exact_solver, "exact_solver.rs");
example!(grid_constructions, "grid_constructions.rs");
example!(clique_families, "clique_families.rs");
example!(kary_trees, "kary_trees.rs");
example!(tree_rewrite, "tree_rewrite.rs");
example!(bounds_check, "bounds_check.rs");
example!(file_formats, "file_formats.rs");

#[test]
fn examples_run() {
    distances::run().expect("distances");
    verify_certificates::run().expect("verify_certificates");
    exact_solver::run().expect("exact_solver");
    grid_constructions::run().expect("grid_constructions");
    clique_families::run().expect("clique_families");
    kary_trees::run().expect("kary_trees");
    tree_rewrite::run().expect("tree_rewrite");
    bounds_check::run().expect("bounds_check");
    file_formats::run().expect("file_formats");
}
