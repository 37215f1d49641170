//! Regenerates `fixtures/z6r2_genus3.rot`:
//! `cargo run --release --example gen_fixture -- [seed] > fixtures/z6r2_genus3.rot`

use cayley_embed::embeddings::{regenerate_triple_torus, TRIPLE_TORUS_EFFORT, TRIPLE_TORUS_SEED};

fn main() {
    let seed = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("seed must be an integer"))
        .unwrap_or(TRIPLE_TORUS_SEED);
    match regenerate_triple_torus(TRIPLE_TORUS_EFFORT, seed) {
        Ok(c) => print!("{}", c.to_text()),
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(1);
        }
    }
}
