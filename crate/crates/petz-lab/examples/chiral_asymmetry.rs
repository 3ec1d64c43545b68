//! t-asymmetry of the recovery fidelity for a chiral boundary state.
//!
//! The chiral thermal state e^{−β_L H_L − β_R H_R} with β_L = ∞, β_R = 8
//! breaks time reversal; its fidelity curve is nearly flat for t > 0 and
//! drops sharply for t < 0, unlike the symmetric non-chiral ground state.

use petz_lab::gaussian::petz::{curve_argmax, default_t_grid};
use petz_lab::gaussian::{chiral_correlation, cmi, ising_cft_correlation, petz_fidelity_curve};
use petz_lab::region::RegionLabel;
use petz_lab::Region;

fn curve_for(
    g: &petz_lab::gaussian::CorrelationMatrix,
    la: usize,
    lb: usize,
    lc: usize,
    start: usize,
) -> petz_lab::Result<(f64, Vec<(f64, f64)>)> {
    let a = Region::interval(start, la, RegionLabel::A);
    let b = Region::interval(start + la, lb, RegionLabel::B);
    let c = Region::interval(start + la + lb, lc, RegionLabel::C);
    let i_acb = cmi(g, &a, &b, &c)?;
    let abc = a.union(&b)?.union(&c)?;
    let g_abc = g.partial_trace(&abc)?;
    let (ra, rb, rc) = (
        Region::interval(0, la, RegionLabel::A),
        Region::interval(la, lb, RegionLabel::B),
        Region::interval(la + lb, lc, RegionLabel::C),
    );
    Ok((i_acb, petz_fidelity_curve(&g_abc, &ra, &rb, &rc, &default_t_grid())?))
}

fn main() -> petz_lab::Result<()> {
    let l = 128;
    let (la, lb, lc, start) = (3, 10, 3, 56);

    let chiral = chiral_correlation(l, 8.0)?;
    let ground = ising_cft_correlation(l)?;
    let (cmi_chiral, curve_chiral) = curve_for(&chiral, la, lb, lc, start)?;
    let (cmi_ground, curve_ground) = curve_for(&ground, la, lb, lc, start)?;

    println!("A|B|C = {la}|{lb}|{lc}; chiral CMI = {cmi_chiral:.5} bits (ground: {cmi_ground:.5})");
    println!("\n     t      F_t (chiral)   F_t (ground)");
    for (&(t, fc), &(_, fg)) in curve_chiral.iter().zip(&curve_ground) {
        println!("{t:8.3}   {fc:.9}    {fg:.9}");
    }

    let (t_c, _) = curve_argmax(&curve_chiral);
    let (t_g, _) = curve_argmax(&curve_ground);
    let at = |curve: &[(f64, f64)], t: f64| {
        curve.iter().find(|(x, _)| (x - t).abs() < 1e-9).unwrap().1
    };
    println!("\nchiral:  argmax at t = {t_c:+.2}, F(+4) - F(-4) = {:+.4e}",
        at(&curve_chiral, 4.0) - at(&curve_chiral, -4.0));
    println!("ground:  argmax at t = {t_g:+.2}, F(+4) - F(-4) = {:+.4e}",
        at(&curve_ground, 4.0) - at(&curve_ground, -4.0));
    Ok(())
}
