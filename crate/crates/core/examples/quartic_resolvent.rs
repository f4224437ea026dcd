//! Energy of x^4 + a x^2 + b x + c (four real roots, two of them positive)
//! through the resolvent sextic, compared with the roots found directly.

use multipartite_energy::poly::{poly_energy, quartic_energy, resolvent_sextic, Poly};

fn main() -> multipartite_energy::Result<()> {
    let quartics = [
        [1.0, 2.0, -1.0, -2.0],
        [0.5, 2.5, -1.0, -2.0],
        [1.0, 4.0, -2.0, -3.0],
        [0.25, 0.75, -0.4, -0.6],
    ];
    for roots in quartics {
        let p = Poly::from_roots(&roots);
        let (a, b, c) = (p.coeff(2), p.coeff(1), p.coeff(0));
        let via_resolvent = quartic_energy(a, b, c)?;
        let direct = poly_energy(&p)?;
        println!(
            "roots {roots:?}: sextic {:?}, energy {via_resolvent:.12} vs {direct:.12}",
            resolvent_sextic(a, b, c).coeffs()
        );
    }
    Ok(())
}
