//! Support designs of the code and its dual, compared point for point with
//! the ESP block families under the labeling `i <-> gamma^i`.

use rayon::prelude::*;

use crate::blocks::{enumerate_b63, Block, BlockFamily, FamilyTag};
use crate::code::dual::{dual_codeword, dual_min_weight_from_block};
use crate::code::low_weight::{enumerate_low_weight, ScanMethod};
use crate::design::IncidenceStructure;
use crate::error::{internal, precondition, Result};
use crate::field::{Field, FieldElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CodeSide {
    Code,
    Dual,
}

/// Supports of the weight-w codewords.
///
/// For the code, `w` must be at most 6. For the dual only `w = q - 5` is
/// available; those words are produced from the blocks of `B(6, 3)` through
/// their trace triples, and every produced word is checked to have weight
/// `q - 5`.
pub fn support_design(field: &Field, side: CodeSide, w: usize, budget: u128) -> Result<(IncidenceStructure, Option<u64>)> {
    let v = field.n() as u32;
    match side {
        CodeSide::Code => {
            let scan = enumerate_low_weight(field, w, ScanMethod::Esp, budget)?;
            let multiplicity = scan.uniform_multiplicity();
            Ok((IncidenceStructure::new(v, w, scan.supports)?, multiplicity))
        }
        CodeSide::Dual => {
            if w as u64 != field.q() - 5 {
                return Err(precondition(format!("dual supports are available for w = q-5 only, got {w}")));
            }
            let b63 = enumerate_b63(field, budget)?;
            let supports: Vec<Block> = b63
                .blocks
                .par_iter()
                .map(|block| {
                    let t = dual_min_weight_from_block(field, block, FieldElement::ONE)?;
                    let word = dual_codeword(field, t);
                    if word.weight() != w {
                        return Err(internal(format!("trace word of {block:?} has weight {}", word.weight())));
                    }
                    Ok(word.support())
                })
                .collect::<Result<_>>()?;
            Ok((IncidenceStructure::new(v, w, supports)?, Some(field.q() - 1)))
        }
    }
}

/// Equality of two labeled structures on the same point set.
pub fn match_structures(a: &IncidenceStructure, b: &IncidenceStructure) -> Result<bool> {
    if a.v() != b.v() {
        return Err(precondition(format!("point sets differ: {} vs {}", a.v(), b.v())));
    }
    Ok(a.k() == b.k() && a.blocks() == b.blocks())
}

/// A support design together with the block family it is compared against.
#[derive(Clone, Debug)]
pub struct SupportDesignMap {
    pub side: CodeSide,
    pub w: usize,
    pub structure: IncidenceStructure,
    pub codewords_per_support: Option<u64>,
    pub matched: IncidenceStructure,
    pub matched_tag: FamilyTag,
    pub equal: bool,
}

impl SupportDesignMap {
    /// Family-file form of the supports; the header reuses the matched
    /// family's parameters when the two agree.
    pub fn to_family(&self, field: &Field, family: &BlockFamily) -> BlockFamily {
        let (ell, tag) = if self.equal && self.side == CodeSide::Code {
            (family.ell, family.tag)
        } else {
            (0, FamilyTag::Support)
        };
        BlockFamily { q: field.q(), k: self.w, ell, tag, blocks: self.structure.blocks().to_vec() }
    }
}

/// Supports of weight `w` against a family; for the dual side the family is
/// complemented first.
pub fn support_design_map(
    field: &Field,
    side: CodeSide,
    w: usize,
    family: &BlockFamily,
    budget: u128,
) -> Result<SupportDesignMap> {
    let (structure, codewords_per_support) = support_design(field, side, w, budget)?;
    let base = IncidenceStructure::from_family(family)?;
    let matched = match side {
        CodeSide::Code => base,
        CodeSide::Dual => crate::design::complement_design(&base),
    };
    let equal = match_structures(&structure, &matched)?;
    Ok(SupportDesignMap { side, w, structure, codewords_per_support, matched, matched_tag: family.tag, equal })
}
