//! The five equivalent conditions for simplex graphs, with witnesses and
//! preimage reconstruction.
//!
//! cargo run --example simplex_characterization

use simplex_graphs::families::{cartesian_product, cycle, path};
use simplex_graphs::{
    generate, simplex_graph, simplex_preimage, theorem1_report, Family, Graph, Limits,
};

fn main() {
    let limits = Limits::default();
    let cases: Vec<(&str, Graph)> = vec![
        (
            "S(C5)",
            simplex_graph(&cycle(5), &limits).unwrap().graph().clone(),
        ),
        (
            "Fibonacci cube 5",
            generate(Family::FibonacciCube, 5).unwrap(),
        ),
        ("P4", path(4)),
        ("P3 x P3", cartesian_product(&path(3), &path(3))),
        ("P3 x P4", cartesian_product(&path(3), &path(4))),
        ("C6", cycle(6)),
    ];
    for (name, g) in cases {
        println!("== {name}");
        match theorem1_report(&g, &limits) {
            Ok(report) => println!("{report}"),
            Err(e) => println!("error: {e}"),
        }
        if let Ok(Some(p)) = simplex_preimage(&g, &limits) {
            println!(
                "preimage edges {:?}, empty clique at vertex {}",
                p.graph.edges(),
                p.base
            );
        }
        println!();
    }
}
