//! Brauer characters, PIM characters and the Cartan matrix from validated data.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::decomp::DecompositionData;
use crate::chartab::{block_distribution, CharacterTable, ClassFunction, Cyclotomic};
use crate::error::{Error, Result};
use crate::linalg::{cmat_from_q, conj_transpose, det_int, is_positive_definite_int, matmul_c, qmat_from_ints, CMatrix};
use crate::perm::FiniteGroup;

#[derive(Clone, Debug)]
pub struct BrauerSystem {
    pub prime: u64,
    pub regular_classes: Vec<usize>,
    pub decomposition: Vec<Vec<i64>>,
    pub cartan: Vec<Vec<i64>>,
    /// φ_i on the p-regular classes.
    pub phi: CMatrix,
    /// θ_i on all classes.
    pub theta: Vec<ClassFunction>,
    /// `|C_G(y_k)|` for the p-regular classes.
    pub centralizers: Vec<u64>,
    /// Ordinary characters per block, principal block first.
    pub blocks: Vec<Vec<usize>>,
    /// Block index of each Brauer character.
    pub brauer_block: Vec<usize>,
    /// Index of the trivial Brauer character.
    pub trivial: usize,
    pub invariants: SystemInvariants,
}

/// Every consequence of the data that is checked before a system is built.
#[derive(Clone, Debug, Serialize)]
pub struct SystemInvariants {
    pub theta_vanishes_off_regular: bool,
    pub theta_phi_dual: bool,
    pub theta_is_cartan_phi: bool,
    pub orthogonality_gives_y: bool,
    pub cartan_inverse: bool,
    pub cartan_positive_definite: bool,
    pub cartan_det: String,
    pub cartan_det_is_p_power: bool,
    pub brauer_degrees: Vec<String>,
    pub degrees_positive_integers: bool,
    pub has_trivial: bool,
    pub blocks_respected: bool,
    pub labels_match_blocks: Option<bool>,
}

impl SystemInvariants {
    pub fn all_hold(&self) -> bool {
        self.theta_vanishes_off_regular
            && self.theta_phi_dual
            && self.theta_is_cartan_phi
            && self.orthogonality_gives_y
            && self.cartan_inverse
            && self.cartan_positive_definite
            && self.cartan_det_is_p_power
            && self.degrees_positive_integers
            && self.has_trivial
            && self.blocks_respected
            && self.labels_match_blocks != Some(false)
    }
}

impl BrauerSystem {
    pub fn len(&self) -> usize {
        self.regular_classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.regular_classes.is_empty()
    }

    pub fn brauer_degree(&self, i: usize) -> i64 {
        self.phi[i][0].to_i64().expect("validated degree")
    }

    /// Position of a class among the p-regular classes.
    pub fn regular_position(&self, k: usize) -> Option<usize> {
        self.regular_classes.binary_search(&k).ok()
    }

    /// Brauer characters of the principal block.
    pub fn principal_brauer(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.brauer_block[i] == 0).collect()
    }

    /// Coordinates of a class function in the Θ basis, when it lies in the
    /// span and vanishes on p-singular classes.
    pub fn theta_coordinates(&self, g: &FiniteGroup, f: &ClassFunction) -> Option<Vec<Cyclotomic>> {
        let l = self.len();
        // aᵗ Θ_reg = f_reg, i.e. Θ_regᵗ a = f_reg
        let a: CMatrix = (0..l)
            .map(|k| (0..l).map(|i| self.theta[i].value(self.regular_classes[k]).clone()).collect())
            .collect();
        let b: CMatrix = self.regular_classes.iter().map(|&k| vec![f.value(k).clone()]).collect();
        let x = crate::linalg::solve_c(&a, &b)?;
        let coords: Vec<Cyclotomic> = x.into_iter().map(|r| r[0].clone()).collect();
        let mut rebuilt = ClassFunction::zero(g);
        for (c, th) in coords.iter().zip(&self.theta) {
            rebuilt = &rebuilt + &th.map(|v| v * c);
        }
        (rebuilt == *f).then_some(coords)
    }

    /// `⟨f, φ_i⟩` with f restricted to the p-regular classes.
    pub fn inner_with_brauer(&self, f: &ClassFunction, i: usize) -> Cyclotomic {
        let mut acc = Cyclotomic::zero();
        for (pos, &k) in self.regular_classes.iter().enumerate() {
            let t = f.value(k) * &self.phi[i][pos].conj();
            acc += &t.scale(&BigRational::new(1.into(), self.centralizers[pos].into()));
        }
        acc
    }
}

fn fail(msg: impl Into<String>) -> Error {
    Error::Decomposition(msg.into())
}

/// Build θ, C and the blocks from validated data and assert every invariant.
pub fn brauer_system(g: &FiniteGroup, table: &CharacterTable, data: &DecompositionData) -> Result<BrauerSystem> {
    let p = data.prime;
    let cl = g.classes();
    let regular = data.regular_classes.clone();
    let l = regular.len();
    let d = &data.matrix;
    let cartan = data.cartan();
    let phi = data.phi.clone();
    let centralizers: Vec<u64> = regular.iter().map(|&k| cl.centralizer_order(k)).collect();

    let theta: Vec<ClassFunction> = (0..l)
        .map(|j| {
            let coeffs: Vec<i64> = d.iter().map(|r| r[j]).collect();
            table.combine(g, &coeffs)
        })
        .collect();
    let singular: Vec<usize> = (0..cl.len()).filter(|k| !cl.is_pi_regular(*k, &[p])).collect();
    let theta_vanishes_off_regular = theta.iter().all(|t| t.is_zero_on(&singular));

    let theta_reg: CMatrix =
        theta.iter().map(|t| regular.iter().map(|&k| t.value(k).clone()).collect()).collect();
    let c = cmat_from_q(&qmat_from_ints(&cartan));
    let theta_is_cartan_phi = matmul_c(&c, &phi) == theta_reg;

    let yinv: CMatrix = (0..l)
        .map(|a| {
            (0..l)
                .map(|b| {
                    if a == b {
                        Cyclotomic::from_rational(BigRational::new(1.into(), centralizers[a].into()))
                    } else {
                        Cyclotomic::zero()
                    }
                })
                .collect()
        })
        .collect();
    let y: CMatrix = (0..l)
        .map(|a| (0..l).map(|b| Cyclotomic::from_int(if a == b { centralizers[a] as i64 } else { 0 })).collect())
        .collect();
    let phi_bar_t = conj_transpose(&phi);
    let orthogonality_gives_y = matmul_c(&phi_bar_t, &matmul_c(&c, &phi)) == y;

    // ⟨θ_i, φ_j⟩ = (Θ Y⁻¹ Φ̄ᵗ)_ij
    let dual = matmul_c(&theta_reg, &matmul_c(&yinv, &phi_bar_t));
    let theta_phi_dual = dual == crate::linalg::identity_c(l);

    let cinv = crate::linalg::inverse_q(&qmat_from_ints(&cartan)).map(|m| cmat_from_q(&m));
    let cartan_inverse = cinv.as_ref().is_some_and(|ci| *ci == matmul_c(&phi, &matmul_c(&yinv, &phi_bar_t)));

    let cartan_positive_definite =
        (0..l).all(|i| (0..l).all(|j| cartan[i][j] == cartan[j][i])) && is_positive_definite_int(&cartan);
    let det = det_int(&cartan);
    let cartan_det_is_p_power = det.is_positive() && {
        let mut v = det.clone();
        let bp = num_bigint::BigInt::from(p);
        while (&v % &bp).is_zero() {
            v /= &bp;
        }
        v.is_one()
    };

    let degrees: Vec<&Cyclotomic> = phi.iter().map(|r| &r[0]).collect();
    let degrees_positive_integers = degrees.iter().all(|v| v.to_i64().is_some_and(|x| x > 0));
    let trivial = phi.iter().position(|r| r.iter().all(|v| *v == Cyclotomic::one()));

    let blocks: Vec<Vec<usize>> = block_distribution(g, table, p)?.into_iter().map(|b| b.characters).collect();
    let mut labels = vec![0; table.len()];
    for (b, chars) in blocks.iter().enumerate() {
        for &i in chars {
            labels[i] = b;
        }
    }
    let mut brauer_block = vec![usize::MAX; l];
    let mut blocks_respected = true;
    for j in 0..l {
        for (chi, row) in d.iter().enumerate() {
            if row[j] == 0 {
                continue;
            }
            if brauer_block[j] == usize::MAX {
                brauer_block[j] = labels[chi];
            } else if brauer_block[j] != labels[chi] {
                blocks_respected = false;
            }
        }
    }
    blocks_respected &= brauer_block.iter().all(|&b| b != usize::MAX);
    let labels_match_blocks = data.block_labels.as_ref().map(|given| {
        (0..given.len()).all(|i| (0..given.len()).all(|j| (given[i] == given[j]) == (labels[i] == labels[j])))
    });

    let invariants = SystemInvariants {
        theta_vanishes_off_regular,
        theta_phi_dual,
        theta_is_cartan_phi,
        orthogonality_gives_y,
        cartan_inverse,
        cartan_positive_definite,
        cartan_det: det.to_string(),
        cartan_det_is_p_power,
        brauer_degrees: degrees.iter().map(|v| v.to_string()).collect(),
        degrees_positive_integers,
        has_trivial: trivial.is_some(),
        blocks_respected,
        labels_match_blocks,
    };
    if !invariants.all_hold() {
        return Err(fail(format!(
            "Brauer system invariants fail: {}",
            serde_json::to_string(&invariants).expect("serializable")
        )));
    }
    Ok(BrauerSystem {
        prime: p,
        regular_classes: regular,
        decomposition: d.clone(),
        cartan,
        phi,
        theta,
        centralizers,
        blocks,
        brauer_block,
        trivial: trivial.expect("checked"),
        invariants,
    })
}
