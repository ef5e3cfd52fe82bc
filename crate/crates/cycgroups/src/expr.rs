//! A small expression language for naming groups on the command line.
//!
//! ```text
//! expr    := factor ("x" factor)*
//! factor  := family | "sd(" expr "," expr "," "inv" ")" | "perm[" cycles (";" cycles)* "]" | "(" expr ")"
//! family  := ("C" | "D" | "Q" | "SD" | "S" | "A") number
//! ```
//!
//! `D8` is the dihedral group of order 8 and `Q8` the quaternion group, so
//! subscripts always give the order except for `S` and `A`, which take the
//! degree. `x` is a left-associative direct product. In `sd(N, H, inv)` the
//! group `N` must be abelian and `H` cyclic of even order; a generator of `H`
//! acts on `N` by inversion.

use cycgroups_core::classify::Recipe;
use cycgroups_core::perm::{pad_to_common_degree, Permutation};
use cycgroups_core::{
    direct_product, from_permutations, make_alternating, make_cyclic, make_dicyclic, make_dihedral,
    make_quasidihedral, make_symmetric, semidirect_product, AutomorphismAction, GroupError,
    GroupTable,
};

use crate::error::{Error, Result};

pub fn parse_group(source: &str) -> Result<GroupTable> {
    let mut parser = Parser {
        src: source,
        pos: 0,
    };
    let group = parser.expr()?;
    parser.skip_ws();
    if parser.pos < source.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(group)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, reason: impl Into<String>) -> Error {
        Error::Parse {
            position: self.pos,
            reason: reason.into(),
        }
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(format!("expected {token:?}")))
        }
    }

    /// An `x` operator: the letter on its own, not the start of a word.
    fn eat_times(&mut self) -> bool {
        self.skip_ws();
        let rest = self.rest();
        let standalone = rest.starts_with('x')
            && !rest[1..].starts_with(|c: char| c.is_ascii_alphanumeric() || c == '_');
        if standalone {
            self.pos += 1;
        }
        standalone
    }

    fn expr(&mut self) -> Result<GroupTable> {
        let mut acc = self.factor()?;
        while self.eat_times() {
            self.skip_ws();
            let at = self.pos;
            let rhs = self.factor()?;
            acc = direct_product(&acc, &rhs).map_err(|e| self.group_error(at, e))?;
        }
        Ok(acc)
    }

    fn group_error(&self, position: usize, e: GroupError) -> Error {
        Error::Parse {
            position,
            reason: e.to_string(),
        }
    }

    fn word(&mut self) -> &str {
        self.skip_ws();
        let len = self
            .rest()
            .find(|c: char| !c.is_ascii_alphabetic())
            .unwrap_or(self.rest().len());
        let start = self.pos;
        self.pos += len;
        &self.src[start..self.pos]
    }

    fn number(&mut self) -> Result<usize> {
        let len = self
            .rest()
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.rest().len());
        if len == 0 {
            return Err(self.error("expected a number"));
        }
        let n = self.rest()[..len]
            .parse()
            .map_err(|_| self.error("number too large"))?;
        self.pos += len;
        Ok(n)
    }

    fn factor(&mut self) -> Result<GroupTable> {
        if self.eat("(") {
            let g = self.expr()?;
            self.expect(")")?;
            return Ok(g);
        }
        let start = {
            self.skip_ws();
            self.pos
        };
        let word = self.word().to_string();
        let built = match word.as_str() {
            "sd" => return self.semidirect(start),
            "perm" => return self.permutations(start),
            "C" => make_cyclic(self.number()?),
            "D" => make_dihedral(self.number()?),
            "Q" => make_dicyclic(self.number()?),
            "SD" => make_quasidihedral(self.number()?),
            "S" => make_symmetric(self.number()?),
            "A" => make_alternating(self.number()?),
            "" => return Err(self.error("expected a group")),
            other => {
                self.pos = start;
                return Err(self.error(format!("unknown group family {other:?}")));
            }
        };
        built.map_err(|e| self.group_error(start, e))
    }

    fn semidirect(&mut self, start: usize) -> Result<GroupTable> {
        self.expect("(")?;
        let normal = self.expr()?;
        self.expect(",")?;
        let acting = self.expr()?;
        self.expect(",")?;
        let action = self.word().to_string();
        if action != "inv" {
            return Err(self.error(format!("unknown action {action:?}, only inv is supported")));
        }
        self.expect(")")?;
        inversion_semidirect(normal, acting).map_err(|e| self.group_error(start, e))
    }

    fn permutations(&mut self, start: usize) -> Result<GroupTable> {
        self.expect("[")?;
        let body_start = self.pos;
        let close = self
            .rest()
            .find(']')
            .ok_or_else(|| self.error("unclosed perm["))?;
        let body = &self.src[body_start..body_start + close];
        let mut perms = Vec::new();
        let mut offset = body_start;
        for part in body.split(';') {
            let p =
                Permutation::parse_cycles(part, None).map_err(|e| self.group_error(offset, e))?;
            perms.push(p);
            offset += part.len() + 1;
        }
        self.pos = body_start + close + 1;
        from_permutations(&pad_to_common_degree(&perms)).map_err(|e| self.group_error(start, e))
    }
}

/// `N ⋊ H` with a generator of the cyclic group `H` inverting `N`.
pub fn inversion_semidirect(
    normal: GroupTable,
    acting: GroupTable,
) -> std::result::Result<GroupTable, GroupError> {
    if !normal.is_abelian() {
        return Err(GroupError::NotAbelian(normal.name().into()));
    }
    let h = acting.order();
    let generator = acting.elements().find(|&x| acting.element_order(x) == h);
    let generator = match generator {
        Some(g) if h.is_multiple_of(2) => g,
        _ => {
            return Err(GroupError::InvalidAction(format!(
                "inversion needs a cyclic acting group of even order, got {}",
                acting.name()
            )))
        }
    };
    let inversion =
        Permutation::from_images(normal.elements().map(|x| normal.inv(x) as usize).collect())?;
    let action =
        AutomorphismAction::from_generator_images(acting, normal, &[(generator, inversion)])?;
    semidirect_product(&action)
}

/// An expression that [`parse_group`] turns back into `recipe`'s group.
/// The two bespoke semidirect products have no family syntax and are written
/// as `perm[...]` over their regular representation.
pub fn recipe_expression(recipe: &Recipe) -> std::result::Result<String, GroupError> {
    Ok(match recipe {
        Recipe::Cyclic(n) => format!("C{n}"),
        Recipe::Dihedral(n) => format!("D{n}"),
        Recipe::Dicyclic(n) => format!("Q{n}"),
        Recipe::Quasidihedral(n) => format!("SD{n}"),
        Recipe::Symmetric(n) => format!("S{n}"),
        Recipe::Alternating(n) => format!("A{n}"),
        Recipe::Direct(a, b) => {
            format!("({}) x ({})", recipe_expression(a)?, recipe_expression(b)?)
        }
        Recipe::InversionExtension(base) => format!("sd({}, C2, inv)", recipe_expression(base)?),
        Recipe::KleinByCyclic4 | Recipe::QuaternionByCyclic2 => {
            let gens: Vec<String> = recipe
                .build()?
                .permutation_generators()
                .iter()
                .map(ToString::to_string)
                .collect();
            format!("perm[{}]", gens.join("; "))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use cycgroups_core::{census, is_isomorphic};

    fn delta(src: &str) -> usize {
        census(&parse_group(src).unwrap()).delta
    }

    #[test]
    fn families_and_products() {
        assert_eq!(parse_group("D8 x C2").unwrap().order(), 16);
        assert_eq!(delta("D8 x C2"), 2);
        assert_eq!(delta("Q8"), 3);
        assert_eq!(delta("sd(C3 x C3, C2, inv)"), 4);
        assert_eq!(delta("  (C2 x C2) x S3 "), 4);
        assert_eq!(parse_group("A4").unwrap().order(), 12);
        assert_eq!(parse_group("SD16").unwrap().order(), 16);
    }

    #[test]
    fn semidirect_by_larger_cyclic() {
        // C3 ⋊ C4 with the generator inverting is the dicyclic group of order 12.
        let g = parse_group("sd(C3, C4, inv)").unwrap();
        assert!(is_isomorphic(&g, &make_dicyclic(12).unwrap()).unwrap());
        assert!(parse_group("sd(S3, C2, inv)").is_err());
        assert!(parse_group("sd(C3, C3, inv)").is_err());
        assert!(parse_group("sd(C3, C2 x C2, inv)").is_err());
    }

    #[test]
    fn permutation_generators() {
        let g = parse_group("perm[(0 1 2); (0 1)]").unwrap();
        assert!(is_isomorphic(&g, &make_symmetric(3).unwrap()).unwrap());
        assert_eq!(parse_group("perm[()]").unwrap().order(), 1);
    }

    #[test]
    fn errors_carry_positions() {
        match parse_group("C100") {
            Err(Error::Parse {
                position: 0,
                reason,
            }) => assert!(reason.contains("64"), "{reason}"),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_group("C4 x"),
            Err(Error::Parse { position: 4, .. })
        ));
        assert!(matches!(
            parse_group("C4 y"),
            Err(Error::Parse { position: 3, .. })
        ));
        assert!(matches!(
            parse_group("Z4"),
            Err(Error::Parse { position: 0, .. })
        ));
        assert!(matches!(parse_group("(C4"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_group("C8 x C8 x C2"),
            Err(Error::Parse { position: 10, .. })
        ));
    }

    #[test]
    fn theorem_groups_round_trip() {
        for claim in cycgroups_core::classify::theorem_claims() {
            for g in &claim.groups {
                let text = recipe_expression(&g.recipe).unwrap();
                let report = census(&parse_group(&text).unwrap());
                assert_eq!(
                    (report.delta, &report.signature),
                    (claim.delta, &g.signature),
                    "{text}"
                );
            }
        }
    }
}
