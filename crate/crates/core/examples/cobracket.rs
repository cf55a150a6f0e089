//! The dihedral cobracket next to the pulled-back co-Ihara cobracket.

use lsdual::dihedral::{cobracket_delta, embed_w, pullback_co_ihara, Composition, PhiInverse, WVector};

fn main() -> lsdual::Result<()> {
    let mut inv = PhiInverse::new();
    for parts in [vec![1, 2], vec![2, 3], vec![1, 1, 3]] {
        let n = Composition::new(parts)?;
        let v = WVector::basis(n.clone());
        let delta = cobracket_delta(&v)?;
        let pulled = pullback_co_ihara(&mut inv, &embed_w(&v));
        println!("{n}");
        let terms: Vec<String> = delta.iter().map(|((a, b), c)| format!("{c} {a}(x){b}")).collect();
        println!("  dihedral:   {}", if terms.is_empty() { "0".into() } else { terms.join(" + ") });
        let terms: Vec<String> = pulled.iter().map(|((a, b), c)| format!("{c} {a}(x){b}")).collect();
        println!("  co-Ihara:   {}", if terms.is_empty() { "0".into() } else { terms.join(" + ") });
    }
    Ok(())
}
