//! The seven bielliptic types `X = E × F / G`.
//!
//! Each type is determined by the finite group `G` acting on the product of
//! two elliptic curves: `G` translates `E` and acts on `F` through a faithful
//! affine representation. The table below records the group order, the
//! stabilizer `G₀` of the origin of `F`, and the self-intersection of the
//! distinguished ample class `𝒪(h⁻¹(0) + F₀)`, which pulls back to
//! `𝒪_E(G) ⊠ 𝒪_F(S)` with `S` the `G`-orbit of the origin, giving
//! `L² = 2·#S = 2·#G/#G₀`.
//!
//! For the order-9 type the distinguished class has `L² = 6`, but a line
//! bundle of bidegree (3, 3) on `E × F` descends along the quotient and
//! yields `L² = (2/#G)·3·3 = 2`; that descended value is what the Fujita
//! classification uses.

use serde::{Deserialize, Serialize};

/// The acting group of a bielliptic surface, one of the seven types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BiellipticGroup {
    #[serde(rename = "mu2")]
    Mu2,
    #[serde(rename = "mu3")]
    Mu3,
    #[serde(rename = "mu4")]
    Mu4,
    #[serde(rename = "mu6")]
    Mu6,
    #[serde(rename = "mu2xZ2")]
    Mu2xZ2,
    #[serde(rename = "mu4xZ2")]
    Mu4xZ2,
    #[serde(rename = "mu3xZ3")]
    Mu3xZ3,
}

impl BiellipticGroup {
    /// All seven types in table order.
    pub const ALL: [BiellipticGroup; 7] = [
        BiellipticGroup::Mu2,
        BiellipticGroup::Mu3,
        BiellipticGroup::Mu4,
        BiellipticGroup::Mu6,
        BiellipticGroup::Mu2xZ2,
        BiellipticGroup::Mu4xZ2,
        BiellipticGroup::Mu3xZ3,
    ];

    /// Order of `G`.
    pub fn order(self) -> u32 {
        match self {
            BiellipticGroup::Mu2 => 2,
            BiellipticGroup::Mu3 => 3,
            BiellipticGroup::Mu4 => 4,
            BiellipticGroup::Mu6 => 6,
            BiellipticGroup::Mu2xZ2 => 4,
            BiellipticGroup::Mu4xZ2 => 8,
            BiellipticGroup::Mu3xZ3 => 9,
        }
    }

    /// Order of the stabilizer `G₀` of the origin of `F` (the cyclic part).
    pub fn stabilizer_order(self) -> u32 {
        match self {
            BiellipticGroup::Mu2 => 2,
            BiellipticGroup::Mu3 => 3,
            BiellipticGroup::Mu4 => 4,
            BiellipticGroup::Mu6 => 6,
            BiellipticGroup::Mu2xZ2 => 2,
            BiellipticGroup::Mu4xZ2 => 4,
            BiellipticGroup::Mu3xZ3 => 3,
        }
    }

    /// Size of the `G`-orbit `S` of the origin of `F`.
    pub fn orbit_size(self) -> u32 {
        self.order() / self.stabilizer_order()
    }

    /// `L² = 2·#S` of the distinguished ample class.
    pub fn distinguished_l_sq(self) -> u32 {
        2 * self.orbit_size()
    }

    /// `L²` of the descended bidegree-(3,3) bundle, available only for the
    /// order-9 type: `(2/9)·3·3 = 2`.
    pub fn descended_l_sq(self) -> Option<u32> {
        match self {
            BiellipticGroup::Mu3xZ3 => Some(2),
            _ => None,
        }
    }

    /// The least known ample self-intersection; at most 4 in every type,
    /// which is what pins the Fujita number to 2.
    pub fn min_known_ample_selfint(self) -> u32 {
        self.descended_l_sq()
            .map_or(self.distinguished_l_sq(), |d| {
                d.min(self.distinguished_l_sq())
            })
    }

    /// Display label, e.g. `μ3×Z/3`.
    pub fn label(self) -> &'static str {
        match self {
            BiellipticGroup::Mu2 => "μ2",
            BiellipticGroup::Mu3 => "μ3",
            BiellipticGroup::Mu4 => "μ4",
            BiellipticGroup::Mu6 => "μ6",
            BiellipticGroup::Mu2xZ2 => "μ2×Z/2",
            BiellipticGroup::Mu4xZ2 => "μ4×Z/2",
            BiellipticGroup::Mu3xZ3 => "μ3×Z/3",
        }
    }

    /// Stabilizer label, e.g. `μ3` (equal to the group label for the cyclic
    /// types).
    pub fn stabilizer_label(self) -> &'static str {
        match self {
            BiellipticGroup::Mu2 | BiellipticGroup::Mu2xZ2 => "μ2",
            BiellipticGroup::Mu3 | BiellipticGroup::Mu3xZ3 => "μ3",
            BiellipticGroup::Mu4 | BiellipticGroup::Mu4xZ2 => "μ4",
            BiellipticGroup::Mu6 => "μ6",
        }
    }
}
