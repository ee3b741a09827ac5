use crate::error::{Error, Result};
use crate::field::BinaryFieldCtx;

#[inline]
fn parity(x: u32) -> u8 {
    (x.count_ones() & 1) as u8
}

/// The symplectic and quadratic structure on `V = GF(2^10)` viewed as a
/// 10-dimensional GF(2)-space, plus the bilinear cocycle that defines the
/// extraspecial group.
///
/// * `B(u, v) = Tr(u * v^32)` (absolute trace),
/// * `Q(u) = Tr_{GF(32)/GF(2)}(u^33)`,
/// * `c(u, v) = Σ_i u_i v_i Q(e_i) + Σ_{i>j} u_i v_j B(e_i, e_j)` in the
///   polynomial basis `e_i = x^i`.
#[derive(Clone, Debug)]
pub struct SymplecticData {
    dim: u32,
    quadratic: Vec<u8>,
    /// Row combinations of the cocycle matrix: `c(u, v) = parity(cocycle_rows[u] & v)`.
    cocycle_rows: Vec<u32>,
    /// Same for the form `B`.
    form_rows: Vec<u32>,
}

impl SymplecticData {
    /// Builds the forms over the given field (degree 10) and verifies every
    /// invariant exhaustively.
    pub fn build(field: &BinaryFieldCtx) -> Result<Self> {
        let k = field.degree();
        if k != 10 {
            return Err(Error::InvalidArgument(
                "the symplectic data is defined over GF(2^10)".into(),
            ));
        }
        let size = field.size() as usize;
        let trace: Vec<u8> = field.elements().map(|x| field.abs_trace(x)).collect();
        let pow32: Vec<u32> = field
            .elements()
            .map(|x| field.frobenius(x, 5).bits())
            .collect();
        let form = |u: u32, v: u32| trace[field.mul_bits(u, pow32[v as usize]) as usize];
        let quadratic = field
            .elements()
            .map(|u| field.subfield_trace(field.pow(u, 33), 5))
            .collect::<Result<Vec<u8>>>()?;

        let basis: Vec<u32> = (0..k).map(|i| 1 << i).collect();
        let mut cocycle_matrix = vec![0u32; k as usize];
        let mut form_matrix = vec![0u32; k as usize];
        for i in 0..k as usize {
            for j in 0..k as usize {
                let b = form(basis[i], basis[j]);
                form_matrix[i] |= u32::from(b) << j;
                let c = match i.cmp(&j) {
                    std::cmp::Ordering::Equal => quadratic[basis[i] as usize],
                    std::cmp::Ordering::Greater => b,
                    std::cmp::Ordering::Less => 0,
                };
                cocycle_matrix[i] |= u32::from(c) << j;
            }
        }
        let rows = |m: &[u32]| -> Vec<u32> {
            (0..size as u32)
                .map(|u| {
                    (0..k)
                        .filter(|&i| u >> i & 1 == 1)
                        .fold(0, |acc, i| acc ^ m[i as usize])
                })
                .collect()
        };
        let data = Self {
            dim: k,
            quadratic,
            cocycle_rows: rows(&cocycle_matrix),
            form_rows: rows(&form_matrix),
        };

        // the row tables must agree with the trace definition of B
        for u in 0..size as u32 {
            for v in 0..size as u32 {
                if data.form(u, v) != form(u, v) {
                    return Err(Error::Construction(format!(
                        "B is not bilinear at ({u:#x}, {v:#x})"
                    )));
                }
            }
        }
        data.verify()?;
        Ok(data)
    }

    /// Exhaustive checks: B alternating and nondegenerate, B the polar
    /// form of Q, c(u,v) + c(v,u) = B(u,v) and c(u,u) = Q(u).
    pub fn verify(&self) -> Result<()> {
        let size = self.size();
        for u in 0..size {
            if self.form(u, u) != 0 {
                return Err(Error::Construction(format!("B({u:#x}, {u:#x}) != 0")));
            }
            if u != 0 && self.form_rows[u as usize] == 0 {
                return Err(Error::Construction(format!(
                    "B is degenerate: {u:#x} is in the radical"
                )));
            }
            if self.cocycle(u, u) != self.quadratic(u) {
                return Err(Error::Construction(format!("c(u, u) != Q(u) at {u:#x}")));
            }
            for v in 0..size {
                let polar = self.quadratic(u ^ v) ^ self.quadratic(u) ^ self.quadratic(v);
                let b = self.form(u, v);
                if polar != b || self.cocycle(u, v) ^ self.cocycle(v, u) != b {
                    return Err(Error::Construction(format!(
                        "form identities fail at ({u:#x}, {v:#x})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    /// Number of vectors, `2^dim`.
    pub fn size(&self) -> u32 {
        1 << self.dim
    }

    #[inline]
    pub fn form(&self, u: u32, v: u32) -> u8 {
        parity(self.form_rows[u as usize] & v)
    }

    #[inline]
    pub fn quadratic(&self, u: u32) -> u8 {
        self.quadratic[u as usize]
    }

    #[inline]
    pub fn cocycle(&self, u: u32, v: u32) -> u8 {
        parity(self.cocycle_rows[u as usize] & v)
    }

    /// Number of zeros of `Q`, including the zero vector.
    pub fn quadratic_zero_count(&self) -> usize {
        self.quadratic.iter().filter(|&&q| q == 0).count()
    }

    /// `"minus"` or `"plus"`, read off the number of zeros of `Q`.
    pub fn quadratic_type(&self) -> &'static str {
        let m = self.dim / 2;
        let plus = (1usize << (2 * m - 1)) + (1usize << (m - 1));
        if self.quadratic_zero_count() == plus {
            "plus"
        } else {
            "minus"
        }
    }
}
