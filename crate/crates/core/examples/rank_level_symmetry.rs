//! M(r,k,g)·k^g = M(k,r,g)·r^g and the rank-two summand profile.
//!
//! cargo run --example rank_level_symmetry

use verlinde_qh::duality::{m_via_factorization, rank_level_symmetry_check, summand_profile};

fn main() -> verlinde_qh::Result<()> {
    for (r, k) in [(2, 1), (2, 2), (2, 3), (3, 2), (3, 4)] {
        for g in 1..=3 {
            println!(
                "M({r},{k},{g}) = {:>8}   M({k},{r},{g}) = {:>8}   symmetric: {}",
                m_via_factorization(r, k, g)?,
                m_via_factorization(k, r, g)?,
                rank_level_symmetry_check(r, k, g)?
            );
        }
    }

    // r = k = 2: group summands by how many slots hold {1,3}
    for g in 1..=5 {
        let p = summand_profile(g)?;
        let parts: Vec<String> = p
            .classes
            .iter()
            .map(|(ell, c)| {
                let vals: Vec<String> = c.values.iter().map(|v| v.to_string()).collect();
                format!("l={ell}: {} x {}", c.tuples, vals.join("/"))
            })
            .collect();
        println!("g={g}: {}  total {}", parts.join(", "), p.total);
    }
    Ok(())
}
