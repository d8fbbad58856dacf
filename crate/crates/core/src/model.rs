//! A concrete instance: a graded module together with named submodules and
//! named subsets of submodules.

use alloc::string::String;
use alloc::vec::Vec;

use crate::group::GradingGroup;
use crate::module::GradedModule;
use crate::ring::BaseRing;
use crate::submodule::GradedSubmodule;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Model {
    pub module: GradedModule,
    /// Declaration order; names are unique.
    pub submodules: Vec<(String, GradedSubmodule)>,
    /// Members are names from `submodules`.
    pub subsets: Vec<(String, Vec<String>)>,
}

impl Model {
    pub fn new(module: GradedModule) -> Self {
        Model { module, submodules: Vec::new(), subsets: Vec::new() }
    }

    pub fn group(&self) -> &GradingGroup {
        self.module.group()
    }

    pub fn ring(&self) -> BaseRing {
        self.module.ring()
    }

    pub fn submodule(&self, name: &str) -> Option<&GradedSubmodule> {
        self.submodules.iter().find(|(n, _)| n == name).map(|(_, s)| s)
    }

    pub fn subset(&self, name: &str) -> Option<Vec<&GradedSubmodule>> {
        let (_, members) = self.subsets.iter().find(|(n, _)| n == name)?;
        members.iter().map(|m| self.submodule(m)).collect()
    }

    /// Names are unique and subset members resolve.
    pub fn is_consistent(&self) -> bool {
        let mut names: Vec<&str> =
            self.submodules.iter().map(|(n, _)| n.as_str()).chain(self.subsets.iter().map(|(n, _)| n.as_str())).collect();
        let total = names.len();
        names.sort_unstable();
        names.dedup();
        names.len() == total && self.subsets.iter().all(|(_, ms)| ms.iter().all(|m| self.submodule(m).is_some()))
    }
}
