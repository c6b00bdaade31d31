//! Reading and writing edge lists, label files and complexes, and driving
//! the command line in-process.
//!
//! cargo run --example text_formats

use simplex_graphs::cli::run;
use simplex_graphs::embed;
use simplex_graphs::format::{
    parse_complex, parse_edge_list, parse_labels, write_complex, write_dot, write_labels,
};

fn main() {
    let g = parse_edge_list("# the 4-cycle\n4 4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
    print!("{}", write_dot(&g, None));
    print!("labels:\n{}", write_labels(&embed(&g, 0).unwrap()));

    let r = parse_labels("000\n100\n110\n111\n").unwrap();
    println!("path from labels: edges {:?}", r.cube.graph().edges());

    let cx = parse_complex("4\n1 2 3\n3 4\n").unwrap();
    print!("complex:\n{}", write_complex(&cx));

    let mut stdin = "4 3\n0 1\n1 2\n2 3\n".as_bytes();
    let out = run(["simplexgraph", "theorem1"], &mut stdin);
    print!("theorem1 on P4 (exit {}):\n{}", out.code, out.stdout);
    let out = run(
        ["simplexgraph", "check", "median"],
        &mut "3 1\n0 9\n".as_bytes(),
    );
    print!("bad input (exit {}): {}", out.code, out.stderr);
}
