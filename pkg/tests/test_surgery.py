from collections import Counter
from dataclasses import replace

import pytest

from disksurgery import (
    DiskPairSystem,
    DisjointDisksError,
    InvalidSystemError,
    SurgeryChoice,
    SurgeryChoiceError,
    Word,
    all_surgeries,
    boundary_word,
    builtin_scenario,
    closure_report,
    format_word,
    outermost_choices,
    parse_word,
    surger,
    unoriented_cyclic_class,
    validate_system,
)
from helpers import (
    DISK_E_WORD,
    OUTCOME_LONG,
    OUTCOME_SHORT,
    disjoint_system,
    random_system,
    single_chord_system,
)


@pytest.fixture(scope="module")
def fig1():
    return builtin_scenario("fig1", 3)


def outcome_classes(outcomes):
    return {unoriented_cyclic_class(o.boundary_word) for o in outcomes}


def expected_classes(rank=3):
    return {
        unoriented_cyclic_class(parse_word(OUTCOME_SHORT, rank)),
        unoriented_cyclic_class(parse_word(OUTCOME_LONG, rank)),
    }


class TestValidate:
    def test_fig1_valid(self, fig1):
        assert validate_system(fig1) == []

    def test_crossing_chords_detected(self):
        system = DiskPairSystem(
            rank=2,
            points=("p1", "p2", "p3", "p4"),
            order_d=("p1", "p2", "p3", "p4"),
            order_e=("p1", "p3", "p2", "p4"),
            chords=(("p1", "p3"), ("p2", "p4")),
            labels_d=(Word(),) * 4,
            labels_e=(Word(),) * 4,
        )
        codes = {v.code for v in validate_system(system)}
        assert "crossing-chords-d" in codes
        assert "crossing-chords-e" not in codes

    def test_disjoint_disks_valid(self):
        assert validate_system(disjoint_system()) == []

    def test_accepts_generated_rejects_mutated(self, rng):
        mutations = {
            "order-d-mismatch": lambda s: replace(s, order_d=s.order_d[:-1]),
            "order-e-mismatch": lambda s: replace(
                s, order_e=(s.order_e[1],) + s.order_e[1:]),
            "label-count-d": lambda s: replace(s, labels_d=s.labels_d[:-1]),
            "label-rank-e": lambda s: replace(
                s, labels_e=(Word((s.rank + 1,)),) + s.labels_e[1:]),
            "bad-rank": lambda s: replace(s, rank=1),
            "not-a-matching": lambda s: replace(s, chords=s.chords[:-1]),
            "degenerate-chord": lambda s: replace(
                s, chords=((s.chords[0][0], s.chords[0][0]),) + s.chords[1:]),
            "unknown-endpoint": lambda s: replace(
                s, chords=((s.chords[0][0], "bogus"),) + s.chords[1:]),
            "crossing-chords-d": lambda s: replace(s, chords=(
                (s.order_d[0], s.order_d[2]), (s.order_d[1], s.order_d[3]),
            ) + tuple(
                (s.order_d[i], s.order_d[i + 1]) for i in range(4, len(s.order_d), 2)
            )),
        }
        for _ in range(60):
            system = random_system(rng, min_chords=2)
            assert validate_system(system) == []
            for expected_code, mutate in mutations.items():
                codes = {v.code for v in validate_system(mutate(system))}
                assert expected_code in codes, (expected_code, codes)


class TestBoundaryWord:
    def test_fig1_disk_e(self, fig1):
        assert format_word(boundary_word(fig1, "E")) == DISK_E_WORD

    def test_fig1_disk_e_reduces_to_x2(self, fig1):
        assert format_word(boundary_word(fig1, "E").reduced()) == "x2"

    def test_disjoint_single_label(self):
        assert format_word(boundary_word(disjoint_system(label_d="x1"), "D")) == "x1"

    def test_rejects_invalid_system(self, fig1):
        broken = replace(fig1, labels_d=fig1.labels_d[:-1])
        with pytest.raises(InvalidSystemError, match="label-count-d"):
            boundary_word(broken, "D")


class TestOutermostChoices:
    def test_fig1_two_per_direction(self, fig1):
        assert len(outermost_choices(fig1, "E")) == 2
        assert len(outermost_choices(fig1, "D")) == 2

    def test_single_chord_has_both_sides(self):
        system = single_chord_system(["x1", "x2"], ["1", "1"])
        choices = outermost_choices(system, "E")
        assert len(choices) == 2
        assert {c.start for c in choices} == {"a", "b"}

    def test_parallel_chords_one_side_each(self, fig1):
        for choice in outermost_choices(fig1, "E"):
            order = fig1.order_e
            start = order.index(choice.start)
            assert order[(start + 1) % len(order)] == choice.end

    def test_disjoint_disks_error(self):
        with pytest.raises(DisjointDisksError):
            outermost_choices(disjoint_system(), "E")


class TestSurger:
    def test_fig1_outcomes_along_e(self, fig1):
        for choice in outermost_choices(fig1, "E"):
            for outcome in surger(fig1, choice):
                assert unoriented_cyclic_class(outcome.boundary_word) in expected_classes()

    def test_single_chord_outcome_words(self):
        system = single_chord_system(["x1", "x2"], ["x1 x2", "1"])
        choice = outermost_choices(system, "E")[0]
        assert choice.start == "a"
        cap = parse_word("x1 x2", 2)
        first, second = surger(system, choice)
        assert first.boundary_word == parse_word("x1", 2) * cap.inverse()
        assert second.boundary_word == parse_word("x2", 2) * cap
        assert first.inherited_chords == 0
        assert second.inherited_chords == 0

    def test_fig1_inherited_below_chord_count(self, fig1):
        for outcome in all_surgeries(fig1):
            assert outcome.inherited_chords <= 1 < fig1.chord_count

    def test_rejects_non_outermost_choice(self, fig1):
        bogus = SurgeryChoice(target="D", chord=fig1.chords[0],
                              start=fig1.chords[0][0], end=fig1.chords[0][0])
        with pytest.raises(SurgeryChoiceError):
            surger(fig1, bogus)


class TestAllSurgeries:
    def test_fig1_eight_outcomes(self, fig1):
        assert len(all_surgeries(fig1)) == 8

    def test_single_chord_eight_outcomes(self):
        system = single_chord_system(["x1", "x2"], ["1", "1"])
        assert len(all_surgeries(system)) == 8

    def test_fig1_classes_are_the_two_expected(self, fig1):
        assert outcome_classes(all_surgeries(fig1)) == expected_classes()

    def test_deterministic_order(self, fig1):
        first = [(o.choice, o.piece, o.boundary_word) for o in all_surgeries(fig1)]
        second = [(o.choice, o.piece, o.boundary_word) for o in all_surgeries(fig1)]
        assert first == second
        assert [o.choice.target for o in all_surgeries(fig1)] == ["D"] * 4 + ["E"] * 4


class TestClosureReport:
    def test_fig1_not_weakly_closed_either_direction(self, fig1):
        report = closure_report(fig1)
        for direction in report.directions:
            assert not direction.any_primitive
            assert not direction.all_primitive

    def test_higher_genus_same_classes(self):
        for genus in (4, 5):
            system = builtin_scenario("fig1", genus)
            assert outcome_classes(all_surgeries(system)) == expected_classes(genus)
            report = closure_report(system)
            assert not any(d.any_primitive for d in report.directions)

    def test_all_primitive_synthetic_pair(self):
        system = single_chord_system(["x1", "x2"], ["1", "1"])
        report = closure_report(system)
        for direction in report.directions:
            assert direction.all_primitive
            assert direction.any_primitive

    def test_all_implies_any(self, rng):
        for _ in range(40):
            report = closure_report(random_system(rng, max_chords=3))
            for direction in report.directions:
                assert direction.any_primitive or not direction.all_primitive


class TestSurgeryProperties:
    def test_monotone_and_paired(self, rng):
        for _ in range(200):
            system = random_system(rng)
            k = system.chord_count
            for along in ("E", "D"):
                for choice in outermost_choices(system, along):
                    first, second = surger(system, choice)
                    assert first.inherited_chords < k
                    assert second.inherited_chords < k
                    assert first.inherited_chords + second.inherited_chords == k - 1

    def test_split_conserves_target_word(self, rng):
        for _ in range(200):
            system = random_system(rng)
            for along in ("E", "D"):
                target = "D" if along == "E" else "E"
                whole = boundary_word(system, target)
                for choice in outermost_choices(system, along):
                    first, second = surger(system, choice)
                    cap = system.labels_of(along)[
                        system.order_of(along).index(choice.start)]
                    path_first = first.boundary_word.letters[
                        :len(first.boundary_word) - len(cap)]
                    path_second = second.boundary_word.letters[
                        :len(second.boundary_word) - len(cap)]
                    split = Word(path_first) * Word(path_second)
                    assert sorted(split.letters) == sorted(whole.letters)
                    assert split.cyclic() == whole.cyclic()

    def test_basepoint_rotation_preserves_outcome_classes(self, rng):
        for _ in range(100):
            system = random_system(rng, max_chords=4)
            baseline = Counter(
                unoriented_cyclic_class(o.boundary_word) for o in all_surgeries(system))
            shift_d = rng.randrange(len(system.order_d))
            shift_e = rng.randrange(len(system.order_e))
            rotated = replace(
                system,
                order_d=system.order_d[shift_d:] + system.order_d[:shift_d],
                labels_d=system.labels_d[shift_d:] + system.labels_d[:shift_d],
                order_e=system.order_e[shift_e:] + system.order_e[:shift_e],
                labels_e=system.labels_e[shift_e:] + system.labels_e[:shift_e],
            )
            assert validate_system(rotated) == []
            rotated_classes = Counter(
                unoriented_cyclic_class(o.boundary_word) for o in all_surgeries(rotated))
            assert rotated_classes == baseline
