//! M(r, k, g) by factorization and by a sum of twisted Gromov–Witten numbers.
//!
//! cargo run --release --example strange_duality -- 2 2 4

use verlinde_qh::duality::sd_check;

fn main() -> verlinde_qh::Result<()> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let (r, k, g) = match args[..] {
        [r, k, g] => (r, k, g),
        _ => (2, 2, 3),
    };
    let report = sd_check(r, k, g, true, None)?;
    for t in report.per_tuple.iter().flatten() {
        let names: Vec<String> = t.tuple.iter().map(|s| s.to_string()).collect();
        println!("{:<40} {}", names.join(" "), t.value);
    }
    println!(
        "M({r},{k},{g}) by factorization: {}",
        report.m_factorization
    );
    println!("M({r},{k},{g}) by GW numbers:    {}", report.m_gw);
    println!("agree: {}", report.agree);
    Ok(())
}
