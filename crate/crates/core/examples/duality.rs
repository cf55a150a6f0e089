//! phi(F) is the orthogonal complement of ls, and f_m maps ls onto Dsh.

use lsdual::context::Context;
use lsdual::dihedral::{f_matrix, phi_matrix};
use lsdual::linalg::{span, SparseMatrix};

fn main() -> lsdual::Result<()> {
    let ctx = Context::default();
    for (m, k) in [(2, 6), (2, 8), (3, 7), (3, 9)] {
        let ls = ctx.ls(m, k)?;
        let image = ctx.f(m, k)?.image(&phi_matrix(m, k))?;
        let perp = ls.orthogonal_complement(&SparseMatrix::identity(ls.ambient_dim()))?;
        let fm = f_matrix(m, k)?;
        let images: Vec<_> = ls.basis().iter().map(|v| fm.apply(v)).collect();
        let rank = span(images, fm.rows())?.dim();
        println!(
            "({m},{k}): dim ls = {}, phi(F) = ls^perp: {}, rank f_m|ls = {rank}, dim Dsh = {}",
            ls.dim(),
            image == perp,
            ctx.dsh(m, k)?.dim()
        );
    }
    Ok(())
}
