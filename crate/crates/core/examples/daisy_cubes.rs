//! Daisy cubes from generators, recognition, and the minimal non-daisy
//! partial cubes.
//!
//! cargo run --example daisy_cubes

use simplex_graphs::{
    daisy_generate, embed, generate, is_daisy, proper_pc_minors, BinaryLabel, Family, Limits,
};

fn main() {
    let gens: Vec<BinaryLabel> = ["1100", "0111"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    let d = daisy_generate(4, &gens).unwrap();
    println!(
        "daisy cube of {{1100, 0111}}: {} vertices, idim {}, dropped coordinates {:?}",
        d.cube.vertex_count(),
        d.cube.idim(),
        d.dropped()
    );

    let limits = Limits::default();
    for (name, family, n) in [
        ("Q2-+", Family::QMinusPlus, 2),
        ("Q3-+", Family::QMinusPlus, 3),
        ("Q3--", Family::QMinusMinus, 3),
        ("Q4--", Family::QMinusMinus, 4),
        ("H4--", Family::HMinusMinus, 4),
        ("Q3-", Family::QMinus, 3),
    ] {
        let cube = embed(&generate(family, n).unwrap(), 0).unwrap();
        let minors = proper_pc_minors(&cube, &limits).unwrap();
        let daisy_minors = minors.iter().filter(|m| is_daisy(m).is_some()).count();
        println!(
            "{name}: daisy {}, {daisy_minors}/{} proper minors daisy",
            is_daisy(&cube)
                .map(|w| format!("(base {})", w.base))
                .unwrap_or("no".into()),
            minors.len()
        );
    }
}
