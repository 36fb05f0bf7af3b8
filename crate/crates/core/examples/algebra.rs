//! Loading and validating gentle algebras.

use gentle_cones::algebra::GentleAlgebra;
use gentle_cones::fixtures;

fn main() {
    for (name, alg) in [
        ("kronecker", fixtures::kronecker()),
        ("final", fixtures::final_algebra()),
    ] {
        println!(
            "{name}: {} vertices, {} arrows, {} relations",
            alg.vertex_count(),
            alg.arrows().len(),
            alg.relations().count()
        );
    }

    // A loop without relations spans an infinite-dimensional algebra.
    let looped =
        r#"{"vertices": [1], "arrows": [{"name": "x", "from": 1, "to": 1}], "relations": []}"#;
    match GentleAlgebra::from_json(looped) {
        Ok(_) => unreachable!("a relation-free loop must be rejected"),
        Err(e) => println!("rejected: {e}"),
    }
}
