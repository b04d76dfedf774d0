//! Minimum-weight pairing between an NMDS code and its dual: every minimum
//! weight support of the code is disjoint from exactly one minimum weight
//! support of the dual.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::code::dual::dual_trace_scan;
use crate::code::linear::{build_code, kernel_to_subfield_solution, m_matrix};
use crate::code::low_weight::{enumerate_low_weight, ScanMethod};
use crate::code::weights::{classify_mds, MdsClass};
use crate::error::{internal, precondition, Result};
use crate::field::Field;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NmdsReport {
    pub q: u64,
    pub class: MdsClass,
    pub d: usize,
    pub d_dual: usize,
    pub min_weight_count: u128,
    pub dual_min_weight_count: u128,
    pub codewords_per_support: Option<u64>,
    pub sampled: usize,
    /// Sampled codewords with exactly one disjoint dual minimum weight support.
    pub unique_pairings: usize,
    pub pass: bool,
}

pub fn nmds_pairing_check(field: &Field, sample_size: usize, seed: u64, budget: u128) -> Result<NmdsReport> {
    let code = build_code(field)?;
    let (n, k) = (code.n, code.dimension);

    let mut d = None;
    for w in 1..=6 {
        let method = if w >= 5 { ScanMethod::Esp } else { ScanMethod::Rank };
        let scan = enumerate_low_weight(field, w, method, budget)?;
        if scan.count > 0 {
            d = Some(scan);
            break;
        }
    }
    let scan = d.ok_or_else(|| precondition("no codeword of weight at most 6"))?;
    let d = scan.w;

    let dual = dual_trace_scan(field, Some(n - k), budget)?;
    let d_dual = dual.distribution.min_distance().ok_or_else(|| internal("dual code is zero"))?;
    let class = classify_mds(n, k, d, d_dual);
    if class != MdsClass::Nmds {
        return Err(precondition(format!("code is {class}, not NMDS")));
    }
    let dual_count: u128 = dual.distribution.get_u64(d_dual).ok_or_else(|| internal("dual count overflow"))? as u128;
    let dual_masks: Vec<u128> = dual.zero_sets.iter().map(|(zeros, _)| zeros.complement(n as u32).mask()).collect();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let reps = {
        let mut idx: Vec<usize> = (0..scan.supports.len()).collect();
        idx.shuffle(&mut rng);
        idx.truncate(sample_size);
        idx
    };
    let scalars: Vec<_> = field.subfield_elements().into_iter().filter(|x| !x.is_zero()).collect();
    let mut unique = 0;
    for &i in &reps {
        let support = &scan.supports[i];
        let base = kernel_to_subfield_solution(field, &m_matrix(field, support).matrix)?;
        let scalar = scalars[rng.gen_range(0..scalars.len())];
        let word = code.embed(support, &base)?.scale(field, scalar);
        if word.weight() != d || !code.contains(field, word.values())? {
            return Err(internal(format!("sampled word on {support:?} is not a weight-{d} codeword")));
        }
        let mask = word.support().mask();
        let disjoint = dual_masks.iter().filter(|&&m| m & mask == 0).count();
        unique += usize::from(disjoint == 1);
    }
    let pass = scan.count == dual_count && unique == reps.len();
    Ok(NmdsReport {
        q: field.q(),
        class,
        d,
        d_dual,
        min_weight_count: scan.count,
        dual_min_weight_count: dual_count,
        codewords_per_support: scan.uniform_multiplicity(),
        sampled: reps.len(),
        unique_pairings: unique,
        pass,
    })
}
