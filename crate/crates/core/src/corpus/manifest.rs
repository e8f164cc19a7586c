// Generated from the checked corpus; classifiers are pretty-printed.

use super::{CorpusEntry, CostClass};

pub(super) const ENTRIES: &[CorpusEntry] = &[
    CorpusEntry {
        name: "Nat",
        file: "base.cdl",
        layer: 1,
        expected_classifier: "★",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "zero",
        file: "base.cdl",
        layer: 1,
        expected_classifier: "Nat",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "suc",
        file: "base.cdl",
        layer: 1,
        expected_classifier: "Nat ➔ Nat",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "add",
        file: "base.cdl",
        layer: 1,
        expected_classifier: "Nat ➔ Nat ➔ Nat",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "Unit",
        file: "base.cdl",
        layer: 1,
        expected_classifier: "★",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "unit",
        file: "base.cdl",
        layer: 1,
        expected_classifier: "Unit",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "SigmaC",
        file: "base.cdl",
        layer: 1,
        expected_classifier: "Π A : ★. (A ➔ ★) ➔ ★",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "pairC",
        file: "base.cdl",
        layer: 1,
        expected_classifier: "∀ A : ★. ∀ B : A ➔ ★. Π a : A. B a ➔ SigmaC A B",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "SigmaInd",
        file: "base.cdl",
        layer: 1,
        expected_classifier: "Π A : ★. Π B : A ➔ ★. SigmaC A B ➔ ★",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "Sigma",
        file: "base.cdl",
        layer: 1,
        expected_classifier: "Π A : ★. (A ➔ ★) ➔ ★",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "pair",
        file: "base.cdl",
        layer: 1,
        expected_classifier: "∀ A : ★. ∀ B : A ➔ ★. Π a : A. B a ➔ Sigma A B",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "proj1",
        file: "base.cdl",
        layer: 1,
        expected_classifier: "∀ A : ★. ∀ B : A ➔ ★. Sigma A B ➔ A",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "proj2",
        file: "base.cdl",
        layer: 1,
        expected_classifier: "∀ A : ★. ∀ B : A ➔ ★. Π p : Sigma A B. B (proj1 -A -B p)",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "ListC",
        file: "list.cdl",
        layer: 2,
        expected_classifier: "★ ➔ ★",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "nilC",
        file: "list.cdl",
        layer: 2,
        expected_classifier: "∀ A : ★. ListC A",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "consC",
        file: "list.cdl",
        layer: 2,
        expected_classifier: "∀ A : ★. A ➔ ListC A ➔ ListC A",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "ListInd",
        file: "list.cdl",
        layer: 2,
        expected_classifier: "Π A : ★. ListC A ➔ ★",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "List",
        file: "list.cdl",
        layer: 2,
        expected_classifier: "★ ➔ ★",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "nilL",
        file: "list.cdl",
        layer: 2,
        expected_classifier: "∀ A : ★. List A",
        golden_erasure: Some("λ cN. λ cC. cN"),
        cost_class: None,
    },
    CorpusEntry {
        name: "consL",
        file: "list.cdl",
        layer: 2,
        expected_classifier: "∀ A : ★. A ➔ List A ➔ List A",
        golden_erasure: Some("λ x. λ xs. λ cN. λ cC. cC x (xs cN cC)"),
        cost_class: None,
    },
    CorpusEntry {
        name: "rebuildL",
        file: "list.cdl",
        layer: 2,
        expected_classifier: "∀ A : ★. ListC A ➔ List A",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "reflectL",
        file: "list.cdl",
        layer: 2,
        expected_classifier: "∀ A : ★. Π xs : List A. rebuildL -A xs.1 ≃ xs.1",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "elimList",
        file: "list.cdl",
        layer: 2,
        expected_classifier: "∀ A : ★. ∀ P : List A ➔ ★. P (nilL -A) ➔ (∀ xs : List A. Π x : A. P xs ➔ P (consL -A x xs)) ➔ Π xs : List A. P xs",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "VecC",
        file: "list.cdl",
        layer: 2,
        expected_classifier: "★ ➔ Nat ➔ ★",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "nilVC",
        file: "list.cdl",
        layer: 2,
        expected_classifier: "∀ A : ★. VecC A zero",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "consVC",
        file: "list.cdl",
        layer: 2,
        expected_classifier: "∀ A : ★. ∀ n : Nat. A ➔ VecC A n ➔ VecC A (suc n)",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "VecInd",
        file: "list.cdl",
        layer: 2,
        expected_classifier: "Π A : ★. Π n : Nat. VecC A n ➔ ★",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "Vec",
        file: "list.cdl",
        layer: 2,
        expected_classifier: "★ ➔ Nat ➔ ★",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "nilV",
        file: "list.cdl",
        layer: 2,
        expected_classifier: "∀ A : ★. Vec A zero",
        golden_erasure: Some("λ cN. λ cC. cN"),
        cost_class: None,
    },
    CorpusEntry {
        name: "consV",
        file: "list.cdl",
        layer: 2,
        expected_classifier: "∀ A : ★. ∀ n : Nat. A ➔ Vec A n ➔ Vec A (suc n)",
        golden_erasure: Some("λ x. λ xs. λ cN. λ cC. cC x (xs cN cC)"),
        cost_class: None,
    },
    CorpusEntry {
        name: "rebuildV",
        file: "list.cdl",
        layer: 2,
        expected_classifier: "∀ A : ★. ∀ n : Nat. VecC A n ➔ Vec A n",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "reflectV",
        file: "list.cdl",
        layer: 2,
        expected_classifier: "∀ A : ★. ∀ n : Nat. Π xs : Vec A n. rebuildV -A -n xs.1 ≃ xs.1",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "elimVec",
        file: "list.cdl",
        layer: 2,
        expected_classifier: "∀ A : ★. ∀ P : (Π n : Nat. Vec A n ➔ ★). P zero (nilV -A) ➔ (∀ n : Nat. ∀ xs : Vec A n. Π x : A. P n xs ➔ P (suc n) (consV -A -n x xs)) ➔ ∀ n : Nat. Π xs : Vec A n. P n xs",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "len",
        file: "list.cdl",
        layer: 2,
        expected_classifier: "∀ A : ★. List A ➔ Nat",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "appL",
        file: "list.cdl",
        layer: 2,
        expected_classifier: "∀ A : ★. List A ➔ List A ➔ List A",
        golden_erasure: Some("λ xs. xs (λ ys. ys) (λ x. λ ih. λ ys. λ cN. λ cC. cC x (ih ys cN cC))"),
        cost_class: None,
    },
    CorpusEntry {
        name: "appV",
        file: "list.cdl",
        layer: 2,
        expected_classifier: "∀ A : ★. ∀ n : Nat. Vec A n ➔ ∀ m : Nat. Vec A m ➔ Vec A (add n m)",
        golden_erasure: Some("λ xs. xs (λ ys. ys) (λ x. λ ih. λ ys. λ cN. λ cC. cC x (ih ys cN cC))"),
        cost_class: None,
    },
    CorpusEntry {
        name: "v2l",
        file: "reuse.cdl",
        layer: 3,
        expected_classifier: "∀ A : ★. ∀ n : Nat. Vec A n ➔ List A",
        golden_erasure: None,
        cost_class: Some(CostClass::Linear),
    },
    CorpusEntry {
        name: "l2v",
        file: "reuse.cdl",
        layer: 3,
        expected_classifier: "∀ A : ★. Π xs : List A. Vec A (len -A xs)",
        golden_erasure: None,
        cost_class: Some(CostClass::Linear),
    },
    CorpusEntry {
        name: "AppL",
        file: "reuse.cdl",
        layer: 3,
        expected_classifier: "★",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "AppV",
        file: "reuse.cdl",
        layer: 3,
        expected_classifier: "★",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "appV2appL",
        file: "reuse.cdl",
        layer: 3,
        expected_classifier: "AppV ➔ AppL",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "v2lPresLen",
        file: "reuse.cdl",
        layer: 3,
        expected_classifier: "∀ A : ★. ∀ n : Nat. Π xs : Vec A n. n ≃ len -A (v2l -A -n xs)",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "LenDistAppL",
        file: "reuse.cdl",
        layer: 3,
        expected_classifier: "AppL ➔ ★",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "appL2appV",
        file: "reuse.cdl",
        layer: 3,
        expected_classifier: "Π f : AppL. LenDistAppL f ➔ AppV",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "v2lId",
        file: "reuse.cdl",
        layer: 3,
        expected_classifier: "∀ A : ★. ∀ n : Nat. Π xs : Vec A n. v2l -A -n xs ≃ xs",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "v2l!",
        file: "reuse.cdl",
        layer: 3,
        expected_classifier: "∀ A : ★. ∀ n : Nat. Vec A n ➔ List A",
        golden_erasure: Some("λ xs. xs"),
        cost_class: Some(CostClass::Constant),
    },
    CorpusEntry {
        name: "l2vId",
        file: "reuse.cdl",
        layer: 3,
        expected_classifier: "∀ A : ★. Π xs : List A. l2v -A xs ≃ xs",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "l2v!",
        file: "reuse.cdl",
        layer: 3,
        expected_classifier: "∀ A : ★. Π xs : List A. Vec A (len -A xs)",
        golden_erasure: Some("λ xs. xs"),
        cost_class: Some(CostClass::Constant),
    },
    CorpusEntry {
        name: "appV2appLId",
        file: "reuse.cdl",
        layer: 3,
        expected_classifier: "Π f : AppV. ∀ A : ★. Π xs : List A. Π ys : List A. appV2appL f -A xs ys ≃ f -A -(len -A xs) (l2v! -A xs) -(len -A ys) (l2v! -A ys)",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "appV2appL!",
        file: "reuse.cdl",
        layer: 3,
        expected_classifier: "AppV ➔ AppL",
        golden_erasure: Some("λ f. f"),
        cost_class: None,
    },
    CorpusEntry {
        name: "appL2appVId",
        file: "reuse.cdl",
        layer: 3,
        expected_classifier: "Π f : AppL. Π q : LenDistAppL f. ∀ A : ★. ∀ n : Nat. ∀ m : Nat. Π xs : Vec A n. Π ys : Vec A m. appL2appV f q -A -n xs -m ys ≃ f -A (v2l! -A -n xs) (v2l! -A -m ys)",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "appL2appV!",
        file: "reuse.cdl",
        layer: 3,
        expected_classifier: "Π f : AppL. LenDistAppL f ➾ AppV",
        golden_erasure: Some("λ f. f"),
        cost_class: None,
    },
    CorpusEntry {
        name: "appL2appVBad!",
        file: "reuse.cdl",
        layer: 3,
        expected_classifier: "Π f : AppL. LenDistAppL f ➔ AppV",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "IdDep",
        file: "identity.cdl",
        layer: 4,
        expected_classifier: "Π A : ★. (A ➔ ★) ➔ ★",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "intrIdDep",
        file: "identity.cdl",
        layer: 4,
        expected_classifier: "∀ A : ★. ∀ B : A ➔ ★. Π f : (Π a : A. B a). (Π a : A. f a ≃ a) ➔ IdDep A B",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "elimIdDep",
        file: "identity.cdl",
        layer: 4,
        expected_classifier: "∀ A : ★. ∀ B : A ➔ ★. IdDep A B ➔ Π a : A. B a",
        golden_erasure: Some("λ c. λ a. a"),
        cost_class: None,
    },
    CorpusEntry {
        name: "Id",
        file: "identity.cdl",
        layer: 4,
        expected_classifier: "★ ➔ ★ ➔ ★",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "intrId",
        file: "identity.cdl",
        layer: 4,
        expected_classifier: "∀ A : ★. ∀ B : ★. Π f : A ➔ B. (Π a : A. f a ≃ a) ➔ Id A B",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "elimId",
        file: "identity.cdl",
        layer: 4,
        expected_classifier: "∀ A : ★. ∀ B : ★. Id A B ➔ A ➔ B",
        golden_erasure: Some("λ c. λ a. a"),
        cost_class: None,
    },
    CorpusEntry {
        name: "id",
        file: "combinators.cdl",
        layer: 5,
        expected_classifier: "∀ A : ★. Id A A",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "copyType",
        file: "combinators.cdl",
        layer: 5,
        expected_classifier: "∀ F : ★ ➔ ★. ∀ G : ★ ➔ ★. (∀ A : ★. Id (F A) (G A)) ➔ Id (∀ A : ★. F A) (∀ A : ★. G A)",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "copyTypeP",
        file: "combinators.cdl",
        layer: 5,
        expected_classifier: "∀ F : ★ ➔ ★. ∀ P : (Π A : ★. F A ➔ ★). ∀ G : ★ ➔ ★. (∀ A : ★. IdDep (F A) (λ xs. P A xs ➾ G A)) ➔ IdDep (∀ A : ★. F A) (λ xs. (∀ A : ★. P A (xs -A)) ➾ ∀ A : ★. G A)",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "subst",
        file: "combinators.cdl",
        layer: 5,
        expected_classifier: "∀ Y : ★. ∀ I : ★. ∀ X : I ➔ ★. ∀ r : Y ➔ I. ∀ i : I. IdDep Y (λ y. X (r y)) ➔ IdDep Y (λ y. r y ≃ i ➾ X i)",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "supplyPrem",
        file: "combinators.cdl",
        layer: 5,
        expected_classifier: "∀ Y : ★. ∀ I : ★. ∀ X : I ➔ Y ➔ ★. IdDep Y (λ y. ∀ i : I. X i y) ➔ ∀ i : I. IdDep Y (X i)",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "symPrem",
        file: "combinators.cdl",
        layer: 5,
        expected_classifier: "∀ Y : ★. ∀ Z : ★. ∀ s : Y ➔ Z. ∀ t : Y ➔ Z. ∀ B : Y ➔ ★. IdDep Y (λ y. s y ≃ t y ➾ B y) ➔ IdDep Y (λ y. t y ≃ s y ➾ B y)",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "allPi2pi",
        file: "combinators.cdl",
        layer: 5,
        expected_classifier: "∀ I : ★. ∀ X : I ➔ ★. ∀ X' : (Π i : I. X i ➔ ★). ∀ Y : ★. ∀ Y' : Y ➔ ★. Π r : Y ➔ I. Π c1 : IdDep Y (λ y. X (r y)). (Π y : Y. Id (X' (r y) (elimIdDep -Y -(λ y. X (r y)) c1 y)) (Y' y)) ➔ Id (∀ i : I. Π x : X i. X' i x) (Π y : Y. Y' y)",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "allArr2arr",
        file: "combinators.cdl",
        layer: 5,
        expected_classifier: "∀ I : ★. ∀ X : I ➔ ★. ∀ X' : I ➔ ★. ∀ Y : ★. ∀ Y' : ★. Π r : Y ➔ I. IdDep Y (λ y. X (r y)) ➔ (Π y : Y. Id (X' (r y)) Y') ➔ Id (∀ i : I. X i ➔ X' i) (Y ➔ Y')",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "pi2allPiP",
        file: "combinators.cdl",
        layer: 5,
        expected_classifier: "∀ Y : ★. ∀ Y' : Y ➔ ★. ∀ P : (Π y : Y. Y' y ➔ ★). ∀ I : ★. ∀ X : I ➔ ★. ∀ X' : (Π i : I. X i ➔ ★). Π r : Y ➔ I. Π c1 : (∀ i : I. Id (X i) Y). Π c1' : (∀ i : I. Π x : X i. i ≃ r (elimId -(X i) -Y (c1 -i) x)). (∀ i : I. Π x : X i. IdDep (Y' (elimId -(X i) -Y (c1 -i) x)) (λ y'. P (elimId -(X i) -Y (c1 -i) x) y' ➾ X' (r (elimId -(X i) -Y (c1 -i) x)) (ρ ς (c1' -i x) - x))) ➔ IdDep (Π y : Y. Y' y) (λ f. (Π y : Y. P y (f y)) ➾ ∀ i : I. Π x : X i. X' i x)",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "arr2allArrP",
        file: "combinators.cdl",
        layer: 5,
        expected_classifier: "∀ Y : ★. ∀ Y' : ★. ∀ P : Y ➔ Y' ➔ ★. ∀ I : ★. ∀ X : I ➔ ★. ∀ X' : I ➔ ★. Π r : Y ➔ I. Π c1 : (∀ i : I. Id (X i) Y). (∀ i : I. Π x : X i. i ≃ r (elimId -(X i) -Y (c1 -i) x)) ➔ (∀ i : I. Π x : X i. IdDep Y' (λ y'. P (elimId -(X i) -Y (c1 -i) x) y' ➾ X' (r (elimId -(X i) -Y (c1 -i) x)))) ➔ IdDep (Y ➔ Y') (λ f. (Π y : Y. P y (f y)) ➾ ∀ i : I. X i ➔ X' i)",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "ListFC",
        file: "schemes.cdl",
        layer: 8,
        expected_classifier: "★ ➔ ★ ➔ ★",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "nilFC",
        file: "schemes.cdl",
        layer: 8,
        expected_classifier: "∀ A : ★. ∀ X : ★. ListFC A X",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "consFC",
        file: "schemes.cdl",
        layer: 8,
        expected_classifier: "∀ A : ★. ∀ X : ★. A ➔ X ➔ ListFC A X",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "ListFInd",
        file: "schemes.cdl",
        layer: 8,
        expected_classifier: "Π A : ★. Π X : ★. ListFC A X ➔ ★",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "ListF",
        file: "schemes.cdl",
        layer: 8,
        expected_classifier: "★ ➔ ★ ➔ ★",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "nilLF",
        file: "schemes.cdl",
        layer: 8,
        expected_classifier: "∀ A : ★. ∀ X : ★. ListF A X",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "consLF",
        file: "schemes.cdl",
        layer: 8,
        expected_classifier: "∀ A : ★. ∀ X : ★. A ➔ X ➔ ListF A X",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "rebuildLF",
        file: "schemes.cdl",
        layer: 8,
        expected_classifier: "∀ A : ★. ∀ X : ★. ListFC A X ➔ ListF A X",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "reflectLF",
        file: "schemes.cdl",
        layer: 8,
        expected_classifier: "∀ A : ★. ∀ X : ★. Π xs : ListF A X. rebuildLF -A -X xs.1 ≃ xs.1",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "elimListF",
        file: "schemes.cdl",
        layer: 8,
        expected_classifier: "∀ A : ★. ∀ X : ★. ∀ P : ListF A X ➔ ★. P (nilLF -A -X) ➔ (Π x : A. Π xs : X. P (consLF -A -X x xs)) ➔ Π xs : ListF A X. P xs",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "VecFC",
        file: "schemes.cdl",
        layer: 8,
        expected_classifier: "★ ➔ (Nat ➔ ★) ➔ Nat ➔ ★",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "nilVFC",
        file: "schemes.cdl",
        layer: 8,
        expected_classifier: "∀ A : ★. ∀ X : Nat ➔ ★. VecFC A X zero",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "consVFC",
        file: "schemes.cdl",
        layer: 8,
        expected_classifier: "∀ A : ★. ∀ X : Nat ➔ ★. ∀ n : Nat. A ➔ X n ➔ VecFC A X (suc n)",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "VecFInd",
        file: "schemes.cdl",
        layer: 8,
        expected_classifier: "Π A : ★. Π X : Nat ➔ ★. Π n : Nat. VecFC A X n ➔ ★",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "VecF",
        file: "schemes.cdl",
        layer: 8,
        expected_classifier: "★ ➔ (Nat ➔ ★) ➔ Nat ➔ ★",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "nilVF",
        file: "schemes.cdl",
        layer: 8,
        expected_classifier: "∀ A : ★. ∀ X : Nat ➔ ★. VecF A X zero",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "consVF",
        file: "schemes.cdl",
        layer: 8,
        expected_classifier: "∀ A : ★. ∀ X : Nat ➔ ★. ∀ n : Nat. A ➔ X n ➔ VecF A X (suc n)",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "rebuildVF",
        file: "schemes.cdl",
        layer: 8,
        expected_classifier: "∀ A : ★. ∀ X : Nat ➔ ★. ∀ n : Nat. VecFC A X n ➔ VecF A X n",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "reflectVF",
        file: "schemes.cdl",
        layer: 8,
        expected_classifier: "∀ A : ★. ∀ X : Nat ➔ ★. ∀ n : Nat. Π xs : VecF A X n. rebuildVF -A -X -n xs.1 ≃ xs.1",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "elimVecF",
        file: "schemes.cdl",
        layer: 8,
        expected_classifier: "∀ A : ★. ∀ X : Nat ➔ ★. ∀ P : (Π n : Nat. VecF A X n ➔ ★). P zero (nilVF -A -X) ➔ (∀ n : Nat. Π x : A. Π xs : X n. P (suc n) (consVF -A -X -n x xs)) ➔ ∀ n : Nat. Π xs : VecF A X n. P n xs",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "IdMapping",
        file: "schemes.cdl",
        layer: 8,
        expected_classifier: "(★ ➔ ★) ➔ ★",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "IIdMapping",
        file: "schemes.cdl",
        layer: 8,
        expected_classifier: "Π I : ★. ((I ➔ ★) ➔ I ➔ ★) ➔ ★",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "imapL",
        file: "schemes.cdl",
        layer: 8,
        expected_classifier: "∀ A : ★. IdMapping (ListF A)",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "imapV",
        file: "schemes.cdl",
        layer: 8,
        expected_classifier: "∀ A : ★. IIdMapping Nat (VecF A)",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "AlgC",
        file: "schemes.cdl",
        layer: 8,
        expected_classifier: "(★ ➔ ★) ➔ ★ ➔ ★",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "AlgM",
        file: "schemes.cdl",
        layer: 8,
        expected_classifier: "(★ ➔ ★) ➔ ★ ➔ ★",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "lenAlgM",
        file: "schemes.cdl",
        layer: 8,
        expected_classifier: "∀ X : ★. AlgM (ListF X) Nat",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "Fix",
        file: "schemes.cdl",
        layer: 8,
        expected_classifier: "Π F : ★ ➔ ★. IdMapping F ➔ ★",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "IFix",
        file: "schemes.cdl",
        layer: 8,
        expected_classifier: "Π I : ★. Π F : (I ➔ ★) ➔ I ➔ ★. IIdMapping I F ➔ I ➔ ★",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "foldM",
        file: "schemes.cdl",
        layer: 8,
        expected_classifier: "∀ F : ★ ➔ ★. ∀ imap : IdMapping F. ∀ X : ★. AlgM F X ➔ Fix F imap ➔ X",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "ifix2fix",
        file: "schemes.cdl",
        layer: 8,
        expected_classifier: "∀ I : ★. ∀ F : (I ➔ ★) ➔ I ➔ ★. ∀ G : ★ ➔ ★. Π imapF : IIdMapping I F. Π imapG : IdMapping G. (∀ X : I ➔ ★. ∀ Y : ★. (∀ i : I. Id (X i) Y) ➔ ∀ i : I. Id (F X i) (G Y)) ➔ ∀ i : I. Id (IFix I F imapF i) (Fix G imapG)",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "fix2ifix",
        file: "schemes.cdl",
        layer: 8,
        expected_classifier: "∀ G : ★ ➔ ★. ∀ I : ★. ∀ F : (I ➔ ★) ➔ I ➔ ★. Π imapG : IdMapping G. Π imapF : IIdMapping I F. Π ralg : AlgM G I. (∀ Y : ★. ∀ X : I ➔ ★. Π r : Y ➔ I. IdDep Y (λ y. X (r y)) ➔ IdDep (G Y) (λ ys. F X (ralg -Y r ys))) ➔ IdDep (Fix G imapG) (λ x. IFix I F imapF (foldM -G -imapG -I ralg x))",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "vf2lf",
        file: "schemes.cdl",
        layer: 8,
        expected_classifier: "∀ A : ★. ∀ X : Nat ➔ ★. ∀ Y : ★. (∀ n : Nat. Id (X n) Y) ➔ ∀ n : Nat. Id (VecF A X n) (ListF A Y)",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "lf2vf",
        file: "schemes.cdl",
        layer: 8,
        expected_classifier: "∀ A : ★. ∀ Y : ★. ∀ X : Nat ➔ ★. Π r : Y ➔ Nat. IdDep Y (λ y. X (r y)) ➔ IdDep (ListF A Y) (λ xs. VecF A X (lenAlgM -A -Y r xs))",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "ListFix",
        file: "schemes.cdl",
        layer: 8,
        expected_classifier: "★ ➔ ★",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "VecFix",
        file: "schemes.cdl",
        layer: 8,
        expected_classifier: "★ ➔ Nat ➔ ★",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "lenFix",
        file: "schemes.cdl",
        layer: 8,
        expected_classifier: "∀ A : ★. ListFix A ➔ Nat",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "v2lFix",
        file: "schemes.cdl",
        layer: 8,
        expected_classifier: "∀ A : ★. ∀ n : Nat. Id (VecFix A n) (ListFix A)",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "l2vFix",
        file: "schemes.cdl",
        layer: 8,
        expected_classifier: "∀ A : ★. IdDep (ListFix A) (λ xs. VecFix A (lenFix -A xs))",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "v2lGen",
        file: "packaged.cdl",
        layer: 6,
        expected_classifier: "∀ A : ★. ∀ n : Nat. Id (Vec A n) (List A)",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "l2vGen",
        file: "packaged.cdl",
        layer: 6,
        expected_classifier: "∀ A : ★. IdDep (List A) (λ xs. Vec A (len -A xs))",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "v2lGen!",
        file: "packaged.cdl",
        layer: 6,
        expected_classifier: "∀ A : ★. ∀ n : Nat. Vec A n ➔ List A",
        golden_erasure: Some("λ x. x"),
        cost_class: Some(CostClass::Constant),
    },
    CorpusEntry {
        name: "l2vGen!",
        file: "packaged.cdl",
        layer: 6,
        expected_classifier: "∀ A : ★. Π xs : List A. Vec A (len -A xs)",
        golden_erasure: Some("λ x. x"),
        cost_class: Some(CostClass::Constant),
    },
    CorpusEntry {
        name: "v2lPresLenGen",
        file: "packaged.cdl",
        layer: 6,
        expected_classifier: "∀ A : ★. ∀ n : Nat. Π xs : Vec A n. n ≃ len -A (elimId -(Vec A n) -(List A) (v2lGen -A -n) xs)",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "appV2appLGen",
        file: "examples.cdl",
        layer: 7,
        expected_classifier: "Id AppV AppL",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "appV2appLGen!",
        file: "examples.cdl",
        layer: 7,
        expected_classifier: "AppV ➔ AppL",
        golden_erasure: Some("λ x. x"),
        cost_class: None,
    },
    CorpusEntry {
        name: "appL2appVGen",
        file: "examples.cdl",
        layer: 7,
        expected_classifier: "IdDep AppL (λ f. LenDistAppL f ➾ AppV)",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "appL2appVGen!",
        file: "examples.cdl",
        layer: 7,
        expected_classifier: "Π f : AppL. LenDistAppL f ➾ AppV",
        golden_erasure: Some("λ x. x"),
        cost_class: None,
    },
    CorpusEntry {
        name: "AssocL",
        file: "examples.cdl",
        layer: 7,
        expected_classifier: "AppL ➔ ★",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "AssocV",
        file: "examples.cdl",
        layer: 7,
        expected_classifier: "AppV ➔ ★",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "assocV2assocL",
        file: "examples.cdl",
        layer: 7,
        expected_classifier: "∀ f : AppV. Id (AssocV f) (AssocL (elimId -AppV -AppL appV2appLGen f))",
        golden_erasure: None,
        cost_class: None,
    },
    CorpusEntry {
        name: "assocV2assocL!",
        file: "examples.cdl",
        layer: 7,
        expected_classifier: "∀ f : AppV. AssocV f ➔ AssocL (elimId -AppV -AppL appV2appLGen f)",
        golden_erasure: Some("λ x. x"),
        cost_class: None,
    },
];
