use std::collections::HashMap;

use crate::cat::fpcat::FpCategory;
use crate::cat::quiver::{ArrowId, Quiver};
use crate::error::{Error, Result};

/// A finite category given by an explicit composition table.
///
/// Non-identity morphisms are the arrows of the quiver; the table sends a
/// composable pair to its composite, with `None` denoting an identity.
#[derive(Debug, Clone)]
pub struct FiniteCategory {
    pub quiver: Quiver,
    pub comp: HashMap<(ArrowId, ArrowId), Option<ArrowId>>,
}

impl FiniteCategory {
    /// `comp` entries are `(f, g, f;g)` by name, with `None` for identities.
    pub fn new(
        objects: Vec<String>,
        morphisms: Vec<(String, String, String)>,
        comp: Vec<(String, String, Option<String>)>,
    ) -> Result<Self> {
        let quiver = Quiver::new(objects, morphisms)?;
        let mut table = HashMap::new();
        for (f, g, h) in comp {
            let f = quiver.arrow(&f)?;
            let g = quiver.arrow(&g)?;
            let h = match h {
                Some(h) => Some(quiver.arrow(&h)?),
                None => None,
            };
            table.insert((f, g), h);
        }
        let cat = FiniteCategory { quiver, comp: table };
        cat.validate()?;
        Ok(cat)
    }

    fn composite(&self, f: ArrowId, g: ArrowId) -> Result<Option<ArrowId>> {
        self.comp.get(&(f, g)).copied().ok_or_else(|| {
            Error::Invalid(format!(
                "missing composite {};{}",
                self.quiver.arrow_name(f),
                self.quiver.arrow_name(g)
            ))
        })
    }

    pub fn validate(&self) -> Result<()> {
        let q = &self.quiver;
        for (&(f, g), &h) in &self.comp {
            if q.tgt(f) != q.src(g) {
                return Err(Error::NotComposable(format!(
                    "table pair {};{}",
                    q.arrow_name(f),
                    q.arrow_name(g)
                )));
            }
            match h {
                Some(h) => {
                    if q.src(h) != q.src(f) || q.tgt(h) != q.tgt(g) {
                        return Err(Error::Invalid(format!(
                            "composite {};{} has wrong endpoints",
                            q.arrow_name(f),
                            q.arrow_name(g)
                        )));
                    }
                }
                None => {
                    if q.src(f) != q.tgt(g) {
                        return Err(Error::Invalid(format!(
                            "{};{} declared an identity but is not an endomorphism pair",
                            q.arrow_name(f),
                            q.arrow_name(g)
                        )));
                    }
                }
            }
        }
        // totality on composable pairs
        for f in q.arrow_ids() {
            for g in q.arrow_ids() {
                if q.tgt(f) == q.src(g) && !self.comp.contains_key(&(f, g)) {
                    return Err(Error::Invalid(format!(
                        "missing composite {};{}",
                        q.arrow_name(f),
                        q.arrow_name(g)
                    )));
                }
            }
        }
        // associativity
        for f in q.arrow_ids() {
            for g in q.arrow_ids() {
                if q.tgt(f) != q.src(g) {
                    continue;
                }
                for h in q.arrow_ids() {
                    if q.tgt(g) != q.src(h) {
                        continue;
                    }
                    let fg_h = match self.composite(f, g)? {
                        Some(fg) => self.composite(fg, h)?,
                        None => Some(h),
                    };
                    let f_gh = match self.composite(g, h)? {
                        Some(gh) => self.composite(f, gh)?,
                        None => Some(f),
                    };
                    if fg_h != f_gh {
                        return Err(Error::Invalid(format!(
                            "associativity fails at {};{};{}",
                            q.arrow_name(f),
                            q.arrow_name(g),
                            q.arrow_name(h)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The same category as a finitely presented one with the exact table
    /// backend.
    pub fn to_fp(&self) -> Result<FpCategory> {
        FpCategory::new_table(self.quiver.clone(), self.comp.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::fpcat::{HomStatus, Tri};
    use crate::cat::quiver::PathTerm;

    fn z3() -> FiniteCategory {
        FiniteCategory::new(
            vec!["X".into()],
            vec![
                ("r".into(), "X".into(), "X".into()),
                ("rr".into(), "X".into(), "X".into()),
            ],
            vec![
                ("r".into(), "r".into(), Some("rr".into())),
                ("r".into(), "rr".into(), None),
                ("rr".into(), "r".into(), None),
                ("rr".into(), "rr".into(), Some("r".into())),
            ],
        )
        .unwrap()
    }

    #[test]
    fn z3_table_round_trips() {
        let c = z3().to_fp().unwrap();
        let x = c.quiver.obj("X").unwrap();
        let sat = c.require_saturated().unwrap();
        assert_eq!(sat.report.homs[&(x, x)], HomStatus::Closed(3));
        let r = c.quiver.arrow("r").unwrap();
        let rrr = PathTerm::from_arrows(&c.quiver, vec![r, r, r]).unwrap();
        assert_eq!(c.morphisms_equal(&rrr, &PathTerm::identity(x)).unwrap(), Tri::Equal);
    }

    #[test]
    fn missing_composite_rejected() {
        let err = FiniteCategory::new(
            vec!["X".into()],
            vec![("f".into(), "X".into(), "X".into())],
            vec![],
        );
        assert!(err.is_err());
    }

    #[test]
    fn associativity_violation_rejected() {
        // a table where (f;f);f != f;(f;f) cannot be written with a single
        // generator, so use two
        let err = FiniteCategory::new(
            vec!["X".into()],
            vec![
                ("f".into(), "X".into(), "X".into()),
                ("g".into(), "X".into(), "X".into()),
            ],
            vec![
                ("f".into(), "f".into(), Some("g".into())),
                ("f".into(), "g".into(), Some("f".into())),
                ("g".into(), "f".into(), Some("g".into())),
                ("g".into(), "g".into(), None),
            ],
        );
        assert!(err.is_err());
    }
}
