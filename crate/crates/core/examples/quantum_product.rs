//! Quantum products on a Grassmannian, e.g.
//!
//! cargo run --example quantum_product -- 2 5

use verlinde_qh::{quantum_product, QClass, Shape};

fn main() -> verlinde_qh::Result<()> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let (r, n) = match args[..] {
        [r, n] => (r, n),
        _ => (2, 4),
    };
    let gr = Shape::from_rn(r, n)?;
    println!("multiplication table of QH*({gr}), q-degree shown as q^d");
    let basis = gr.subsets();
    for a in &basis {
        for b in basis.iter().filter(|b| *b >= a) {
            let p = quantum_product(
                gr,
                &QClass::basis(gr, a.clone()),
                &QClass::basis(gr, b.clone()),
            )?;
            let terms: Vec<String> = p
                .terms()
                .map(|(s, d, c)| match d {
                    0 => format!("{c}*w{s}"),
                    _ => format!("{c}*q^{d}*w{s}"),
                })
                .collect();
            let rhs = if terms.is_empty() {
                "0".to_string()
            } else {
                terms.join(" + ")
            };
            println!("w{a} * w{b} = {rhs}");
        }
    }
    Ok(())
}
