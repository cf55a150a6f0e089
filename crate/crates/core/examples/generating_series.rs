//! Truncated generating series Q_n and their shuffle law.

use lsdual::dihedral::qseries::{check_q_recursion, check_q_shuffle, q_series};

fn main() {
    let q = q_series(2, 4);
    println!("Q_2 up to degree 4: {} nonzero coefficients", q.len());
    for (e, c) in q.iter().take(4) {
        println!("  t^{e:?}: {c}");
    }
    for (p, r) in [(1, 1), (1, 2), (2, 2)] {
        println!("Q_{p} sh Q_{r}: {}", if check_q_shuffle(p, r, 6).is_none() { "holds" } else { "fails" });
    }
    println!("recursion for Q_3: {}", if check_q_recursion(&[2, 1, 0], 6).is_none() { "holds" } else { "fails" });
}
