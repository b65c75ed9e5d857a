//! Declarative descriptions of jet contexts.
//!
//! A *context* lists the abstract generators whose derivatives the engine is
//! allowed to track: horizontal forms of a fixed degree, either a single form
//! or an `ℝ³`-valued triple, optionally constrained (basic, Laplace
//! eigenfunction) or derived (the rotated gradient triple `I_a d_H f` of a
//! scalar generator).  Contexts are data, not code: they can be embedded or
//! loaded from TOML files.

use serde::Deserialize;

/// How many components a generator has.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Arity {
    /// One horizontal form.
    Single,
    /// An `ℝ³`-valued form, indexed by the three vertical directions.
    Triple,
}

/// One abstract generator.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorSpec {
    /// Name used in atom keys and diagnostics.
    pub name: String,
    /// Horizontal degree of each component (0..=4).  Ignored for derived
    /// rotated-gradient generators, which are always triples of 1-forms.
    #[serde(default)]
    pub degree: u8,
    #[serde(default = "default_arity")]
    pub arity: Arity,
    /// Basic generators are annihilated by every vertical Lie derivative.
    #[serde(default)]
    pub basic: bool,
    /// Eigen generators are scalars with `Δ_H f = ν f`; the eigenvalue is
    /// supplied when the engine is built.
    #[serde(default)]
    pub eigen: bool,
    /// Anti-self-dual 2-form generators: `⋆_H A = −A`, so `d_H ⋆_H A` is
    /// determined by `d_H A` and no independent self-dual tail exists.
    #[serde(default, rename = "anti-self-dual")]
    pub anti_self_dual: bool,
    /// If set, this generator is the triple `I_a d_H base` for the named
    /// scalar generator rather than a free form.
    #[serde(default, rename = "rotated-gradient-of")]
    pub rotated_gradient_of: Option<String>,
    /// Optional Laplace link for a rotated gradient over an eigen scalar:
    /// `Δ_H` acts on the triple as `ν + shift`.
    #[serde(default, rename = "laplace-shift")]
    pub laplace_shift: Option<i64>,
}

fn default_arity() -> Arity {
    Arity::Single
}

/// A full context: a name, a derivative-order cap, and the generators.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ContextSpec {
    pub name: String,
    /// Maximal length of a vertical-derivative word on any atom.
    #[serde(default = "default_word_cap")]
    pub word_cap: usize,
    #[serde(rename = "generator")]
    pub generators: Vec<GeneratorSpec>,
}

fn default_word_cap() -> usize {
    2
}

impl ContextSpec {
    /// Parses a context from TOML text.
    pub fn from_toml_str(text: &str) -> Result<Self, String> {
        let spec: ContextSpec = toml::from_str(text).map_err(|e| e.to_string())?;
        spec.validate()?;
        Ok(spec)
    }

    /// Index of a generator by name.
    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn validate(&self) -> Result<(), String> {
        for (i, g) in self.generators.iter().enumerate() {
            if g.name.is_empty() {
                return Err(format!("generator #{i} has an empty name"));
            }
            if self.generators[..i].iter().any(|h| h.name == g.name) {
                return Err(format!("duplicate generator name `{}`", g.name));
            }
            if let Some(base) = &g.rotated_gradient_of {
                let Some(j) = self.generator_index(base) else {
                    return Err(format!(
                        "generator `{}` rotates the gradient of unknown `{base}`",
                        g.name
                    ));
                };
                let b = &self.generators[j];
                if b.degree != 0 || b.arity != Arity::Single || b.rotated_gradient_of.is_some() {
                    return Err(format!(
                        "generator `{}` must rotate the gradient of a plain scalar",
                        g.name
                    ));
                }
                if g.anti_self_dual {
                    return Err(format!(
                        "generator `{}`: rotated gradients cannot be anti-self-dual",
                        g.name
                    ));
                }
                if g.laplace_shift.is_some() && !b.eigen {
                    return Err(format!(
                        "generator `{}` declares a Laplace link over a non-eigen base",
                        g.name
                    ));
                }
            } else {
                if g.degree > 4 {
                    return Err(format!(
                        "generator `{}` has horizontal degree {} > 4",
                        g.name, g.degree
                    ));
                }
                if g.eigen && g.degree != 0 {
                    return Err(format!("eigen generator `{}` must be a scalar", g.name));
                }
                if g.laplace_shift.is_some() {
                    return Err(format!(
                        "generator `{}`: Laplace links are only for rotated gradients",
                        g.name
                    ));
                }
                if g.anti_self_dual && g.degree != 2 {
                    return Err(format!(
                        "generator `{}`: anti-self-dual requires degree 2",
                        g.name
                    ));
                }
                if g.anti_self_dual && g.eigen {
                    return Err(format!(
                        "generator `{}`: anti-self-dual and eigen are incompatible",
                        g.name
                    ));
                }
            }
        }
        Ok(())
    }

    /// True if any generator requires an eigenvalue parameter.
    pub fn needs_eigenvalue(&self) -> bool {
        self.generators.iter().any(|g| g.eigen)
    }
}

/// Built-in context: free generators for the exterior-derivative block
/// computations on 2- and 3-forms (all five slot shapes).
pub const BLOCKS: &str = include_str!("../../contexts/blocks.toml");
/// Built-in context: one generic scalar with its rotated gradient.
pub const SCALAR_FIELD: &str = include_str!("../../contexts/scalar_field.toml");
/// Built-in context: a basic Laplace eigenfunction with its rotated gradient.
pub const EIGENFUNCTION: &str = include_str!("../../contexts/eigenfunction.toml");
/// Built-in context: a 1-form triple plus a 2-form triple split into
/// anti-self-dual and invariant parts, for the symmetric-image eigen system.
pub const KAPPA: &str = include_str!("../../contexts/kappa.toml");

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_contexts_parse() {
        for (text, name) in [
            (BLOCKS, "blocks"),
            (SCALAR_FIELD, "scalar-field"),
            (EIGENFUNCTION, "eigenfunction"),
            (KAPPA, "kappa"),
        ] {
            let spec = ContextSpec::from_toml_str(text).expect("builtin context must parse");
            assert_eq!(spec.name, name);
        }
    }

    #[test]
    fn rejects_rotated_gradient_of_triple() {
        let text = r#"
            name = "bad"
            [[generator]]
            name = "f"
            degree = 0
            arity = "triple"
            [[generator]]
            name = "beta"
            rotated-gradient-of = "f"
        "#;
        assert!(ContextSpec::from_toml_str(text).is_err());
    }

    #[test]
    fn rejects_eigen_one_form() {
        let text = r#"
            name = "bad"
            [[generator]]
            name = "a"
            degree = 1
            eigen = true
        "#;
        assert!(ContextSpec::from_toml_str(text).is_err());
    }
}
