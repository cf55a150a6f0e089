//! The dihedral spaces `W`, `U`, `V = W ⊕ U`, the relation space `W_R`, its
//! extension `F = W_R ⊕ U`, and their comparison with `ls` through `φ`.

mod cobracket;
mod fh;
mod index;
mod phi;
pub mod qseries;
mod spaces;

pub use index::{
    embed_w, u_indices, v_basis, v_indices, vvector_from_json, vvector_to_json, w_basis, w_indices, wvector_to_json,
    Composition, UIndex, VIndex, VTerm, VVector, WVector,
};
pub use spaces::{
    colon_series, compute_f, compute_f_from, compute_w1even, compute_wr, compute_wsh, compute_wstar, series_colon,
    series_comma, wr_in_v, WSeries,
};
pub use cobracket::{cobracket_delta, cobracket_table, cycle_check, cycle_differences, tensor_blocks, WTensor};
pub use phi::{phi, phi_index, phi_inverse, phi_matrix, phi_u, pullback_co_ihara, PhiInverse, VTensor};
pub use fh::{beta_i_h_matrix, f_map, f_matrix, f_word, h_index, h_map, h_of_dsh_annihilator};
