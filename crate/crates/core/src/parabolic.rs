//! Parabolic subalgebras `g_{Pi,T}` of every prescribed index.

use crate::cascade::{cascade_chain, kg};
use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Subset, TypeLetter};

/// Returns `(Pi, T)` with `chi(g_{Pi,T}) = index`.
///
/// Indices `l - k_g ..= l` come from the cascade chain of `Pi`; the smaller
/// ones exist only in types A, D_odd and E6 and use explicit sets `T`.
pub fn parabolic_of_index(rs: &RootSystem, index: usize) -> Result<(Subset, Subset)> {
    let l = rs.rank();
    if index > l {
        return Err(Error::IndexOutOfRange { index, rank: l });
    }
    let pi = Subset::full(l);
    let n = kg(rs)?;
    if index >= l - n {
        // chi(g_{Pi,S_j}) = l + j - n with S_0 = ∅.
        let j = index + n - l;
        let t = if j == 0 {
            Subset::empty()
        } else {
            cascade_chain(rs, pi)?[j - 1]
        };
        return Ok((pi, t));
    }
    let t = match rs.simple_type().letter() {
        TypeLetter::A => {
            // T_k adds alpha_k for odd k and alpha_{l+1-k} for even k;
            // chi(g_{Pi,T_k}) = (l - n) - k.
            let k = (l - n) - index;
            let mut t = Subset::empty();
            for step in 1..=k {
                t.insert(if step % 2 == 1 { step } else { l + 1 - step });
            }
            t
        }
        // l = 2k + 1, k_g = 2k: only index 0 remains.
        TypeLetter::D => Subset::singleton(l - 1),
        TypeLetter::E if l == 6 => match index {
            1 => Subset::singleton(1),
            _ => Subset::from_indices(&[1, 5]),
        },
        _ => {
            return Err(Error::Internal(format!(
                "{}: k_g = {n} leaves index {index} uncovered",
                rs.simple_type()
            )))
        }
    };
    Ok((pi, t))
}
