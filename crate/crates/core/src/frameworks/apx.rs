//! Extended APX: `arg`, `att`, `jatt`, `natt`, `hatt`, `datt`, `supp` and
//! `ac` facts, each ending in `.`, with `%` line comments.

use std::collections::BTreeSet;

use indexmap::{IndexMap, IndexSet};

use super::{
    AdfSpec, Af, BipolarAf, DisjAf, Framework, HigherAf, HigherAttack, JointAf, JointAttack,
};
use crate::error::{Error, Result};
use crate::formula::{check_name, parse_formula};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Str(String),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Dot,
}

fn input_err(line: usize, message: impl Into<String>) -> Error {
    Error::Input {
        line,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let mut out = Vec::new();
    let mut line = 1;
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '\n' => line += 1,
            c if c.is_whitespace() => {}
            '%' => {
                while let Some(&n) = chars.peek() {
                    if n == '\n' {
                        break;
                    }
                    chars.next();
                }
            }
            '(' => out.push((Tok::LParen, line)),
            ')' => out.push((Tok::RParen, line)),
            '[' => out.push((Tok::LBracket, line)),
            ']' => out.push((Tok::RBracket, line)),
            ',' => out.push((Tok::Comma, line)),
            '.' => out.push((Tok::Dot, line)),
            '"' => {
                let start = line;
                let mut s = String::new();
                loop {
                    match chars.next() {
                        None => return Err(input_err(start, "unterminated string")),
                        Some('"') => break,
                        Some('\\') => match chars.next() {
                            Some(e @ ('"' | '\\')) => s.push(e),
                            _ => return Err(input_err(line, "bad escape in string")),
                        },
                        Some(ch) => {
                            if ch == '\n' {
                                line += 1;
                            }
                            s.push(ch);
                        }
                    }
                }
                out.push((Tok::Str(s), start));
            }
            c if c.is_alphanumeric() || c == '_' => {
                let mut s = String::from(c);
                while let Some(&n) = chars.peek() {
                    if n.is_alphanumeric() || n == '_' {
                        s.push(n);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push((Tok::Ident(s), line));
            }
            other => return Err(input_err(line, format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
enum Term {
    Ident(String),
    Str(String),
    List(Vec<String>),
}

struct Fact {
    name: String,
    args: Vec<Term>,
    line: usize,
}

fn parse_facts(tokens: Vec<(Tok, usize)>) -> Result<Vec<Fact>> {
    let mut facts = Vec::new();
    let mut it = tokens.into_iter().peekable();
    let last_line = |t: Option<&(Tok, usize)>| t.map_or(0, |(_, l)| *l);
    while let Some((tok, line)) = it.next() {
        let Tok::Ident(name) = tok else {
            return Err(input_err(line, "expected a fact name"));
        };
        match it.next() {
            Some((Tok::LParen, _)) => {}
            _ => return Err(input_err(line, format!("expected `(` after {name}"))),
        }
        let mut args = Vec::new();
        loop {
            let term = match it.next() {
                Some((Tok::Ident(s), _)) => Term::Ident(s),
                Some((Tok::Str(s), _)) => Term::Str(s),
                Some((Tok::LBracket, l)) => {
                    let mut items = Vec::new();
                    loop {
                        match it.next() {
                            Some((Tok::Ident(s), _)) => items.push(s),
                            Some((Tok::RBracket, _)) if items.is_empty() => break,
                            _ => return Err(input_err(l, "malformed list")),
                        }
                        match it.next() {
                            Some((Tok::Comma, _)) => {}
                            Some((Tok::RBracket, _)) => break,
                            _ => return Err(input_err(l, "malformed list")),
                        }
                    }
                    Term::List(items)
                }
                other => {
                    let l = last_line(other.as_ref()).max(line);
                    return Err(input_err(l, format!("malformed arguments of {name}")));
                }
            };
            args.push(term);
            match it.next() {
                Some((Tok::Comma, _)) => {}
                Some((Tok::RParen, _)) => break,
                other => {
                    let l = last_line(other.as_ref()).max(line);
                    return Err(input_err(l, format!("malformed arguments of {name}")));
                }
            }
        }
        match it.next() {
            Some((Tok::Dot, _)) => {}
            _ => return Err(input_err(line, format!("fact {name} must end with `.`"))),
        }
        facts.push(Fact { name, args, line });
    }
    Ok(facts)
}

#[derive(Default)]
struct Collected {
    arguments: IndexSet<String>,
    att: Vec<(String, String)>,
    jatt: Vec<JointAttack>,
    natt: Vec<HigherAttack>,
    hatt: Vec<(HigherAttack, usize)>,
    datt: Vec<(String, BTreeSet<String>)>,
    supp: Vec<(String, String)>,
    ac: IndexMap<String, crate::Formula>,
}

impl Collected {
    fn need(&self, name: &str, line: usize) -> Result<String> {
        if self.arguments.contains(name) {
            Ok(name.to_string())
        } else {
            Err(input_err(line, format!("undeclared argument {name}")))
        }
    }
}

fn ident(term: &Term, line: usize, fact: &str) -> Result<String> {
    match term {
        Term::Ident(s) => Ok(s.clone()),
        _ => Err(input_err(line, format!("{fact}: expected an identifier"))),
    }
}

fn list(term: &Term, line: usize, fact: &str) -> Result<Vec<String>> {
    match term {
        Term::List(items) if !items.is_empty() => Ok(items.clone()),
        _ => Err(input_err(
            line,
            format!("{fact}: expected a non-empty list"),
        )),
    }
}

fn arity(f: &Fact, n: usize) -> Result<()> {
    if f.args.len() == n {
        Ok(())
    } else {
        Err(input_err(
            f.line,
            format!("{} takes {n} arguments, got {}", f.name, f.args.len()),
        ))
    }
}

/// Parses extended APX into the most specific framework family present.
pub fn parse_apx(text: &str) -> Result<Framework> {
    let facts = parse_facts(lex(text)?)?;
    let mut c = Collected::default();
    let mut ids: IndexSet<String> = IndexSet::new();
    for f in &facts {
        let l = f.line;
        match f.name.as_str() {
            "arg" => {
                arity(f, 1)?;
                let x = ident(&f.args[0], l, "arg")?;
                check_name(&x).map_err(|e| input_err(l, e.to_string()))?;
                if !c.arguments.insert(x.clone()) {
                    return Err(input_err(l, format!("argument {x} declared twice")));
                }
            }
            "att" | "supp" => {
                arity(f, 2)?;
                let a = c.need(&ident(&f.args[0], l, &f.name)?, l)?;
                let b = c.need(&ident(&f.args[1], l, &f.name)?, l)?;
                if f.name == "att" {
                    c.att.push((a, b));
                } else {
                    c.supp.push((a, b));
                }
            }
            "jatt" => {
                arity(f, 2)?;
                let g = list(&f.args[0], l, "jatt")?
                    .iter()
                    .map(|z| c.need(z, l))
                    .collect::<Result<BTreeSet<_>>>()?;
                let x = c.need(&ident(&f.args[1], l, "jatt")?, l)?;
                c.jatt.push(JointAttack {
                    attackers: g,
                    target: x,
                });
            }
            "natt" | "hatt" => {
                arity(f, 3)?;
                let id = ident(&f.args[0], l, &f.name)?;
                check_name(&id).map_err(|e| input_err(l, e.to_string()))?;
                if c.arguments.contains(&id) || !ids.insert(id.clone()) {
                    return Err(input_err(l, format!("attack id {id} is not fresh")));
                }
                let z = c.need(&ident(&f.args[1], l, &f.name)?, l)?;
                let t = ident(&f.args[2], l, &f.name)?;
                if f.name == "natt" {
                    let t = c.need(&t, l)?;
                    c.natt.push(HigherAttack::new(id, z, t));
                } else {
                    c.hatt.push((HigherAttack::new(id, z, t), l));
                }
            }
            "datt" => {
                arity(f, 2)?;
                let z = c.need(&ident(&f.args[0], l, "datt")?, l)?;
                let set = list(&f.args[1], l, "datt")?
                    .iter()
                    .map(|u| c.need(u, l))
                    .collect::<Result<BTreeSet<_>>>()?;
                c.datt.push((z, set));
            }
            "ac" => {
                arity(f, 2)?;
                let x = c.need(&ident(&f.args[0], l, "ac")?, l)?;
                let Term::Str(src) = &f.args[1] else {
                    return Err(input_err(l, "ac: expected a quoted formula"));
                };
                let phi = parse_formula(src).map_err(|e| input_err(l, format!("ac({x}): {e}")))?;
                if c.ac.insert(x.clone(), phi).is_some() {
                    return Err(input_err(l, format!("second acceptance formula for {x}")));
                }
            }
            other => return Err(input_err(l, format!("unknown fact `{other}`"))),
        }
    }
    build(c)
}

fn build(c: Collected) -> Result<Framework> {
    let present: Vec<&str> = [
        ("att", !c.att.is_empty()),
        ("jatt", !c.jatt.is_empty()),
        ("natt/hatt", !c.natt.is_empty() || !c.hatt.is_empty()),
        ("datt", !c.datt.is_empty()),
        ("supp", !c.supp.is_empty()),
        ("ac", !c.ac.is_empty()),
    ]
    .into_iter()
    .filter(|(_, p)| *p)
    .map(|(n, _)| n)
    .collect();
    let specific: Vec<&str> = present.iter().copied().filter(|n| *n != "att").collect();
    let incompatible = specific.len() > 1
        || (!c.att.is_empty() && matches!(specific.first(), Some(&"natt/hatt") | Some(&"ac")));
    if incompatible {
        return Err(Error::Input {
            line: 0,
            message: format!("incompatible fact families: {}", present.join(", ")),
        });
    }
    let fw = match specific.first().copied() {
        None => Framework::Plain(Af {
            arguments: c.arguments,
            attacks: c.att.into_iter().collect(),
        }),
        Some("jatt") => {
            let mut attacks: IndexSet<JointAttack> = c
                .att
                .into_iter()
                .map(|(a, b)| JointAttack::new([a], b))
                .collect();
            attacks.extend(c.jatt);
            Framework::Joint(JointAf {
                arguments: c.arguments,
                attacks,
            })
        }
        Some("natt/hatt") => Framework::Higher(HigherAf {
            arguments: c.arguments,
            levels: levels(c.natt, c.hatt)?,
        }),
        Some("datt") => Framework::Disjunctive(DisjAf {
            arguments: c.arguments,
            direct: c.att.into_iter().collect(),
            disjunctive: c.datt.into_iter().collect(),
        }),
        Some("supp") => Framework::Bipolar(BipolarAf {
            arguments: c.arguments,
            attacks: c.att.into_iter().collect(),
            supports: c.supp.into_iter().collect(),
        }),
        _ => Framework::Adf(AdfSpec {
            arguments: c.arguments,
            acceptance: c.ac,
        }),
    };
    fw.check()?;
    Ok(fw)
}

/// Places each `hatt` one level above the attack it targets.
fn levels(
    natt: Vec<HigherAttack>,
    hatt: Vec<(HigherAttack, usize)>,
) -> Result<Vec<Vec<HigherAttack>>> {
    let mut level_of: IndexMap<String, usize> = natt.iter().map(|a| (a.id.clone(), 0)).collect();
    let mut out = vec![natt];
    let mut pending = hatt;
    while !pending.is_empty() {
        let before = pending.len();
        let mut rest = Vec::new();
        for (att, line) in pending {
            match level_of.get(&att.target) {
                Some(&lvl) => {
                    let lvl = lvl + 1;
                    level_of.insert(att.id.clone(), lvl);
                    if out.len() <= lvl {
                        out.resize_with(lvl + 1, Vec::new);
                    }
                    out[lvl].push(att);
                }
                None => rest.push((att, line)),
            }
        }
        if rest.len() == before {
            let (att, line) = &rest[0];
            return Err(input_err(
                *line,
                format!("attack {} targets unknown attack id {}", att.id, att.target),
            ));
        }
        pending = rest;
    }
    Ok(out)
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn list_text<'a>(items: impl IntoIterator<Item = &'a String>) -> String {
    let v: Vec<&str> = items.into_iter().map(String::as_str).collect();
    format!("[{}]", v.join(","))
}

/// Prints a framework as extended APX, one fact per line.
pub fn to_apx(fw: &Framework) -> String {
    let mut out = String::new();
    for x in fw.arguments() {
        out.push_str(&format!("arg({x}).\n"));
    }
    let att = |a: &str, b: &str, out: &mut String| out.push_str(&format!("att({a},{b}).\n"));
    match fw {
        Framework::Plain(af) => {
            for (a, b) in &af.attacks {
                att(a, b, &mut out);
            }
        }
        Framework::Joint(jaf) => {
            for j in &jaf.attacks {
                out.push_str(&format!(
                    "jatt({},{}).\n",
                    list_text(&j.attackers),
                    j.target
                ));
            }
        }
        Framework::Higher(haf) => {
            for (i, level) in haf.levels.iter().enumerate() {
                let fact = if i == 0 { "natt" } else { "hatt" };
                for a in level {
                    out.push_str(&format!("{fact}({},{},{}).\n", a.id, a.source, a.target));
                }
            }
        }
        Framework::Disjunctive(daf) => {
            for (a, b) in &daf.direct {
                att(a, b, &mut out);
            }
            for (z, set) in &daf.disjunctive {
                out.push_str(&format!("datt({z},{}).\n", list_text(set)));
            }
        }
        Framework::Bipolar(baf) => {
            for (a, b) in &baf.attacks {
                att(a, b, &mut out);
            }
            for (a, b) in &baf.supports {
                out.push_str(&format!("supp({a},{b}).\n"));
            }
        }
        Framework::Adf(adf) => {
            for (x, phi) in &adf.acceptance {
                out.push_str(&format!("ac({x},{}).\n", quote(&phi.to_string())));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse_formula;

    #[test]
    fn plain_mutual_attack() {
        let fw = parse_apx("arg(a). arg(b). att(a,b). att(b,a).").unwrap();
        assert_eq!(
            fw,
            Framework::Plain(Af::new(["a", "b"], [("a", "b"), ("b", "a")]))
        );
    }

    #[test]
    fn adf_with_comments() {
        let text = "% acceptance conditions\narg(a). arg(b). arg(c). arg(d).\n\
                    ac(a,\"T\"). ac(b,\"b\"). ac(c,\"a & b\"). ac(d,\"~b\").\n";
        let Framework::Adf(adf) = parse_apx(text).unwrap() else {
            panic!("expected an ADF");
        };
        assert_eq!(adf.acceptance["c"], parse_formula("a & b").unwrap());
        assert_eq!(adf.acceptance["d"], parse_formula("~b").unwrap());
        assert_eq!(adf.acceptance.len(), 4);
    }

    #[test]
    fn disjunctive_with_direct_attacks() {
        let fw = parse_apx("arg(a). arg(b). arg(x). arg(y). att(a,b). att(b,a). datt(a,[x,y]).")
            .unwrap();
        let Framework::Disjunctive(daf) = fw else {
            panic!("expected a disjunctive network");
        };
        assert_eq!(daf.direct.len(), 2);
        assert_eq!(daf.disjunctive.len(), 1);
    }

    #[test]
    fn higher_levels_from_references() {
        let text = "arg(z). arg(x). arg(y). arg(u).\n\
                    hatt(g,u,b).\nnatt(a,z,x).\nhatt(b,y,a).\n";
        let Framework::Higher(haf) = parse_apx(text).unwrap() else {
            panic!("expected a higher network");
        };
        assert_eq!(haf.levels.len(), 3);
        assert_eq!(haf.levels[2][0].id, "g");
    }

    #[test]
    fn joint_absorbs_att() {
        let Framework::Joint(jaf) =
            parse_apx("arg(a). arg(b). arg(x). att(a,b). jatt([a,b],x).").unwrap()
        else {
            panic!("expected a joint network");
        };
        assert!(jaf.attacks.contains(&JointAttack::new(["a"], "b")));
    }

    #[test]
    fn errors() {
        let line = |t: &str| match parse_apx(t) {
            Err(Error::Input { line, .. }) => line,
            other => panic!("{other:?}"),
        };
        assert_eq!(line("arg(a).\natt(a,b)."), 2);
        assert_eq!(line("arg(a).\narg(b).\nnatt(i,a,b).\nhatt(j,a,k)."), 4);
        assert_eq!(line("arg(a). arg(b). att(a,b). ac(a,\"T\")."), 0);
        assert_eq!(line("arg(a). arg(b). jatt([a],b). supp(a,b)."), 0);
        assert_eq!(line("arg(a).\nac(a,\"a &\")."), 2);
        assert_eq!(line("arg(a)"), 1);
        assert_eq!(line("arg(a). foo(a)."), 1);
        assert!(matches!(
            parse_apx("arg(a). arg(b). ac(a,\"T\")."),
            Err(Error::Invalid(_))
        ));
    }

    #[test]
    fn quoting() {
        assert_eq!(quote("a\"b"), "\"a\\\"b\"");
        let toks = lex("\"a\\\"b\"").unwrap();
        assert_eq!(toks[0].0, Tok::Str("a\"b".into()));
    }
}
