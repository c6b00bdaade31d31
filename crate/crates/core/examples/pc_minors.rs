//! Restrictions, contractions, minor search and crossing graphs.
//!
//! cargo run --example pc_minors

use simplex_graphs::families::{cycle, path};
use simplex_graphs::pcminor::first_forbidden_minor;
use simplex_graphs::{
    apply_spec, contract_class, crossing_graph, embed, generate, proper_pc_minors, restrict_class,
    Family, Limits, MinorSpec,
};

fn main() {
    let limits = Limits::default();
    let q3 = embed(&generate(Family::Hypercube, 3).unwrap(), 0).unwrap();

    let c = contract_class(&q3, 0).unwrap();
    println!(
        "Q3 / class 0: {} vertices, kept coordinates {:?}",
        c.cube.vertex_count(),
        c.source_coords
    );
    let r = restrict_class(&q3, 2, true).unwrap();
    println!(
        "Q3 restricted to side 1 of class 2: {:?}",
        r.cube
            .label_set()
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
    );

    let spec: MinorSpec = "C1K".parse().unwrap();
    let m = apply_spec(&q3, &spec).unwrap();
    println!("Q3 under {spec}: {} vertices", m.cube.vertex_count());

    let forbidden = [generate(Family::QMinus, 3).unwrap(), cycle(6)];
    for n in [6, 8, 10] {
        let cube = embed(&cycle(n), 0).unwrap();
        match first_forbidden_minor(&cube, &forbidden, &limits).unwrap() {
            Some((i, spec)) => println!("C{n}: contains {} via {spec}", ["Q3-", "C6"][i]),
            None => println!("C{n}: free"),
        }
    }

    let p5 = embed(&path(5), 0).unwrap();
    let minors = proper_pc_minors(&p5, &limits).unwrap();
    let orders: Vec<usize> = minors.iter().map(|m| m.vertex_count()).collect();
    println!(
        "P5 has {} proper pc-minors up to isomorphism, orders {orders:?}",
        minors.len()
    );

    let gear = embed(&generate(Family::Gear, 5).unwrap(), 0).unwrap();
    println!(
        "crossing graph of the gear of C5: {:?}",
        crossing_graph(&gear).edges()
    );
}
