use crate::error::{Error, Result};
use crate::field::ExpField;
use crate::scalar::ComplexRational;

use super::{check_potential_2d, Bispinor3D, Sign, SignPair, SpinorPair2D};

/// `nabla^beta_mu f = del_mu f + i beta A_mu f`.
pub fn nabla(f: &ExpField, a: &ExpField, mu: usize, beta: Sign) -> Result<ExpField> {
    let coupling = a.component_field(&[mu])?.scale(&(&ComplexRational::i() * &beta.scalar()));
    f.partial(mu).add(&coupling.wedge(f)?)
}

/// One summand of an operator matrix entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Term {
    /// `c * f`
    Identity(ComplexRational),
    /// `c * nabla_mu f`
    Nabla(ComplexRational, usize),
}

impl Term {
    fn coefficient_mut(&mut self) -> &mut ComplexRational {
        match self {
            Term::Identity(c) | Term::Nabla(c, _) => c,
        }
    }
}

/// A square matrix of first-order operators built from `nabla^beta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiracOperator {
    beta: Sign,
    entries: Vec<Vec<Vec<Term>>>,
}

fn i_times(s: i64) -> ComplexRational {
    ComplexRational::from_ints(0, s)
}

fn real(s: i64) -> ComplexRational {
    ComplexRational::from(s)
}

impl DiracOperator {
    /// The combined 2x2 system acting on `(phi, chi)`:
    ///
    /// ```text
    /// [  i nabla_0 - 1                   i nabla_1 - alpha beta nabla_2 ]
    /// [ -i nabla_1 - alpha beta nabla_2  -i nabla_0 - 1                 ]
    /// ```
    pub fn two_dimensional(signs: SignPair) -> Self {
        let ab = signs.alpha_beta().value();
        let n = |c: ComplexRational, mu| Term::Nabla(c, mu);
        Self {
            beta: signs.beta,
            entries: vec![
                vec![vec![n(i_times(1), 0), Term::Identity(real(-1))], vec![n(i_times(1), 1), n(real(-ab), 2)]],
                vec![vec![n(i_times(-1), 1), n(real(-ab), 2)], vec![n(i_times(-1), 0), Term::Identity(real(-1))]],
            ],
        }
    }

    /// The 4x4 Dirac operator in the standard representation with
    /// `nabla = del + i A`, acting on `(phi_1, phi_2, chi_1, chi_2)`.
    pub fn three_dimensional() -> Self {
        let n = |c: ComplexRational, mu| Term::Nabla(c, mu);
        let mass = || vec![n(i_times(1), 0), Term::Identity(real(-1))];
        let anti_mass = || vec![n(i_times(-1), 0), Term::Identity(real(-1))];
        Self {
            beta: Sign::Plus,
            entries: vec![
                vec![mass(), vec![], vec![n(i_times(1), 3)], vec![n(i_times(1), 1), n(real(1), 2)]],
                vec![vec![], mass(), vec![n(i_times(1), 1), n(real(-1), 2)], vec![n(i_times(-1), 3)]],
                vec![vec![n(i_times(-1), 3)], vec![n(i_times(-1), 1), n(real(-1), 2)], anti_mass(), vec![]],
                vec![vec![n(i_times(-1), 1), n(real(1), 2)], vec![n(i_times(1), 3)], vec![], anti_mass()],
            ],
        }
    }

    /// Negates one summand; used to build negative controls.
    pub fn with_negated_term(mut self, row: usize, col: usize, term: usize) -> Self {
        let c = self.entries[row][col][term].coefficient_mut();
        *c = -c.clone();
        self
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn apply(&self, inputs: &[ExpField], a: &ExpField) -> Result<Vec<ExpField>> {
        if inputs.len() != self.size() {
            return Err(Error::RankMismatch(format!(
                "operator of size {} applied to {} components",
                self.size(),
                inputs.len()
            )));
        }
        let orientation = inputs.first().map(ExpField::orientation).unwrap_or_default();
        self.entries
            .iter()
            .map(|row| {
                let mut acc = ExpField::zero(0, orientation)?;
                for (terms, f) in row.iter().zip(inputs) {
                    for term in terms {
                        let contribution = match term {
                            Term::Identity(c) => f.scale(c),
                            Term::Nabla(c, mu) => nabla(f, a, *mu, self.beta)?.scale(c),
                        };
                        acc = acc.add(&contribution)?;
                    }
                }
                Ok(acc)
            })
            .collect()
    }
}

/// Rows of the combined 2D system applied to `(phi, chi)`.
pub fn dirac_residual_2d(s: &SpinorPair2D, a: &ExpField, signs: SignPair) -> Result<[ExpField; 2]> {
    check_potential_2d(a)?;
    let rows = DiracOperator::two_dimensional(signs).apply(&[s.phi().clone(), s.chi().clone()], a)?;
    Ok(rows.try_into().expect("two rows"))
}

/// Rows of the 3D Dirac operator applied to `psi`.
pub fn dirac_residual_3d(psi: &Bispinor3D, a: &ExpField) -> Result<[ExpField; 4]> {
    if a.rank() != 1 || !a.is_real() {
        return Err(Error::Precondition("potential A must be a real vector field".into()));
    }
    let rows = DiracOperator::three_dimensional().apply(&psi.components, a)?;
    Ok(rows.try_into().expect("four rows"))
}
