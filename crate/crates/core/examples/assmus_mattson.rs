use bch_designs::code::{
    assmus_mattson_check, build_code, classify_mds, dual_weight_distribution, macwilliams_transform, DualMethod,
};
use bch_designs::Field;

fn main() -> bch_designs::Result<()> {
    for (m, t) in [(4, 3), (5, 4)] {
        let f = Field::new(m)?;
        let code = build_code(&f)?;
        let dual = dual_weight_distribution(&f, DualMethod::SupportFormula, u128::MAX)?;
        let primal = macwilliams_transform(&dual, code.n, 6, f.q())?;
        let am = assmus_mattson_check(&primal, &dual, t, f.q())?;
        let class = classify_mds(code.n, code.dimension, am.d, am.d_dual);
        println!(
            "q={:<3} t={t}: d={} d_dual={} s={} -> hypothesis {}; code is {class}",
            f.q(),
            am.d,
            am.d_dual,
            am.s,
            if am.hypothesis_holds { "holds" } else { "fails" }
        );
    }
    Ok(())
}
