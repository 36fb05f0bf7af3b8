//! Complexes of projectives attached to words, and their unfolded diagrams.

use gentle_cones::complexes::{build_walk_complex, UnfoldedDiagram};
use gentle_cones::fixtures::kronecker;
use gentle_cones::walks::parse_walk;

fn main() {
    let k = kronecker();
    let w = parse_walk("band: d ~c ~a b @ 3", &k).unwrap();

    println!("{}", UnfoldedDiagram::of(&w, &k).text(&k));
    println!("B(w, 3, 1):\n{}", build_walk_complex(&w, 1).text(&k));
    println!(
        "B(w, 3, 2) has total rank {}",
        build_walk_complex(&w, 2).total_rank()
    );
    println!("{}", UnfoldedDiagram::of(&w, &k).tikz(&k));
}
