//! Θ-classes of a few partial cubes, their labellings and boundary sets.
//!
//! cargo run --example theta_classes

use simplex_graphs::families::{cycle, path};
use simplex_graphs::theta::all_class_data;
use simplex_graphs::{embed, is_partial_cube, theta_classes, Graph};

fn show(name: &str, g: &Graph) {
    println!("== {name}");
    if !is_partial_cube(g) {
        println!("not a partial cube\n");
        return;
    }
    let cube = embed(g, 0).unwrap();
    for (v, l) in cube.labels().iter().enumerate() {
        println!("  vertex {v}: {l}");
    }
    for (d, edges) in all_class_data(&cube).iter().zip(theta_classes(g).unwrap()) {
        println!(
            "  class {} edges {:?} W0={:?} U0={:?} W1={:?} U1={:?} peripheral {}",
            d.index,
            edges,
            d.w0,
            d.u0,
            d.w1,
            d.u1,
            d.is_peripheral()
        );
    }
    println!();
}

fn main() {
    show("P4", &path(4));
    show("C6", &cycle(6));
    show("C5", &cycle(5));
    let k23 = Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
    show("K2,3", &k23);
}
