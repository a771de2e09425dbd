"""Author the index-only screening bundles for the four largest groups.

No generators are shipped: these exist purely for the arithmetic stages.
Every declared subgroup order must divide the group order exactly, and the
expected screening outcome of every single index is asserted before writing.
"""

from __future__ import annotations

from math import prod

import groupmodels as gm
from gqprim import CaseInput, PipelineOptions, run_case
from gqprim.arith import SOUND

FI23_ORDER = 2**18 * 3**13 * 5**2 * 7 * 11 * 13 * 17 * 23
CO1_ORDER = 2**21 * 3**9 * 5**4 * 7**2 * 11 * 13 * 23
B_ORDER = 2**41 * 3**13 * 5**6 * 7**2 * 11 * 13 * 17 * 19 * 23 * 31 * 47
M_ORDER = (2**46 * 3**20 * 5**9 * 7**6 * 11**2 * 13**3
           * 17 * 19 * 23 * 29 * 31 * 41 * 47 * 59 * 71)

FI23_MAXIMALS = [
    ("2.Fi22", 129123503308800),
    ("O8+(3):S3", 29713078886400),
    ("2^2.U6(2).2", 73574645760),
    ("S8(2)", 47377612800),
    ("S3xO7(3)", 27512110080),
    ("2^11.M23", 20891566080),
    ("3^{1+8}.2^{1+6}.3^{1+2}.2S4", 3265173504),
    ("[3^10].(L3(3)x2)", 663238368),
    ("S12", 479001600),
    ("2^{6+8}:(S3xA7)", 247726080),
    ("S4(4):4", 3916800),
    ("L2(23)", 6072),
]

CO1_MAXIMALS = [
    ("Co2", 42305421312000),
    ("3.Suz:2", 2690072985600),
    ("2^11:M24", 501397585920),
    ("Co3", 495766656000),
    ("2^{1+8}.O8+(2)", 89181388800),
    ("U6(2):S3", 55180984320),
    ("(A4xG2(4)):2", 6038323200),
    ("2^{2+12}:(A8xS3)", 1981808640),
    ("2^{4+12}.(S3x3S6)", 849346560),
    ("3^2.U4(3).D8", 235146240),
    ("3^6:2.M12", 138568320),
    ("(A5xJ2):2", 72576000),
    ("3^{1+4}:2.Sp4(3).2", 25194240),
    ("(A6xU3(3)).2", 4354560),
    ("3^{3+4}:2.(S4xS4)", 2519424),
    ("A9xS3", 1088640),
    ("(A7xL2(7)):2", 846720),
    ("(D10x(A5xA5).2).2", 144000),
    ("5^{1+2}:GL2(5)", 60000),
    ("5^3:(4xA5).2", 60000),
    ("7^2:(3x2A4)", 3528),
    ("5^2:4A5", 6000),
]

B_MAXIMALS = [
    ("2.2E6(2):2", 4 * 76532479683774853939200),
    ("2^{1+22}.Co2", 2**23 * 42305421312000),
    ("Fi23", FI23_ORDER),
    ("2^{9+16}.S8(2)", 2**25 * 47377612800),
    ("Th", 90745943887872000),
    ("(2^2xF4(2)):2", 8 * 3311126603366400),
    ("2^{2+10+20}.(M22:2xS3)", 2**32 * 443520 * 12),
    ("[2^30].L5(2)", 2**30 * 9999360),
    ("S3xFi22:2", 12 * 64561751654400),
    ("[2^35].(S5xL3(2))", 2**35 * 20160),
    ("HN:2", 2 * 273030912000000),
    ("O8+(3):S4", 24 * 4952179814400),
    ("3^{1+8}.2^{1+6}.U4(2).2", 3**9 * 2**7 * 25920 * 2),
    ("(3^2:D8xU4(3).2^2).2", 72 * 3265920 * 8),
    ("5:4xHS:2", 20 * 88704000),
    ("S4x2F4(2)", 24 * 35942400),
    ("[3^11].(S4x2S4)", 3**11 * 1152),
    ("S5xM22:2", 120 * 887040),
    ("(S6xL3(4):2).2", 720 * 40320 * 2),
    ("5^3.L3(5)", 125 * 372000),
    ("5^{1+4}.2^{1+4}.A5.4", 5**5 * 2**5 * 240),
    ("(S6xS6).4", 518400 * 4),
    ("5^2:4S4xS5", 2400 * 120),
    ("L2(49).2", 117600),
    ("L2(31)", 14880),
    ("M11", 7920),
    ("L3(3)", 5616),
    ("L2(17):2", 4896),
    ("L2(11):2", 1320),
    ("47:23", 1081),
]

# indices of the 42 maximal classes, largest subgroup first
M_INDICES = [
    97239461142009186000, 5791748068511982636944259375,
    439909863614532427326210000000, 512372707698741056749515292734375,
    16009115629875684006343550944921875, 282599644298926271851701207040000000,
    391965121389536908413379198941796875, 1484028541986258159045049319424000000,
    4050306254358548053604918389065234375, 6065553341050124859256025907200000000,
    147971784380684498443615773616452403200, 377694424605514962329798663208960000000,
    16458603283969466072643078298009600000000, 69632552355255433384259177414656000000000,
    2137612234906118719276348954925160732819456, 4773365227577903302562875496013496320000000,
    28114639032330054704286996987125956608000000, 69506875251140892549372895050469742538129408,
    360804534248235702038349794668116443136000000, 406922407046882370719943377445244108800000000,
    718237710928455889676853248854854006227337216, 1227948204794415624584299721349471928320000000,
    1589822867634109834649512818264086937600000000,
    2672015293632648399095436193656450916024320000,
    6440808214679248895891202946141582786560000000,
    11133397056802701662897650806901878816768000000,
    13812263671701074801477947093362577042833408000,
    23847343014511647519742692273961304064000000000,
    70848890361471737854803232407557410652160000000,
    77933779397618911640283555648313151717376000000,
    463738191456905920504166612122193960632320000000,
    547294894007597532814267768386619441152000000000,
    681636554498124591605978620830727274496000000000,
    922293247309099546038858646725599428608000000000,
    1277021419351060909899958126235445362688000000000,
    4516082186421377575935948496320762111590400000000,
    7870810683757187569515487092944776514764800000000,
    11129716594965742092099998690932655055175680000000,
    33169845024405290471529552748838701026508800000000,
    49077831923864970595630460699812363763712000000000,
    118131202455338139749482442245864145761075200000000,
    492693551703971265784426771318116315247411200000000,
]


def screen_all(name, order, pairs, *, expect_empty=True):
    indices = [i for i, _ in pairs]
    records = []
    for i, o in pairs:
        case = CaseInput(group_name=name, group_order=order,
                         maximal_name=f"idx{i}", index=i, maximal_order=o,
                         all_indices=indices)
        rec = run_case(case, PipelineOptions())
        records.append(rec)
        if expect_empty:
            assert not rec.candidates, (name, i, [(c.s, c.t) for c in rec.candidates])
    return records


def author_fi23():
    pairs = []
    for nm, o in FI23_MAXIMALS:
        assert FI23_ORDER % o == 0, nm
        pairs.append((FI23_ORDER // o, o))
    target = FI23_ORDER // 663238368
    assert target == 6165913600

    indices = [i for i, _ in pairs]
    for (nm, o), (i, _) in zip(FI23_MAXIMALS, pairs):
        case = CaseInput(group_name="Fi23", group_order=FI23_ORDER,
                         maximal_name=nm, index=i, maximal_order=o,
                         all_indices=indices)
        rec = run_case(case, PipelineOptions())
        if i == target:
            assert [(c.s, c.t) for c in rec.candidates] == [(2991, 689)]
            c = rec.candidates[0]
            assert c.eliminated_by == "line_orbits_strict"
            srec = run_case(case, PipelineOptions(mode=SOUND))
            assert srec.candidates[0].eliminated_by == "line_orbits_sound"
        else:
            assert not rec.candidates, (nm, [(c.s, c.t) for c in rec.candidates])

    gm.write_index_only_bundle(
        "fi23.json", name="Fi23", order=FI23_ORDER,
        provenance="order and subgroup orders from standard subgroup "
                   "structure tables; screening-only bundle",
        maximals=[gm.maximal_entry(nm, index=FI23_ORDER // o, order=o,
                                   provenance="order from standard subgroup "
                                              "structure tables")
                  for nm, o in FI23_MAXIMALS])


def author_co1():
    pairs = []
    for nm, o in CO1_MAXIMALS:
        assert CO1_ORDER % o == 0, nm
        pairs.append((CO1_ORDER // o, o))
    screen_all("Co1", CO1_ORDER, pairs)
    gm.write_index_only_bundle(
        "co1.json", name="Co1", order=CO1_ORDER,
        provenance="order and subgroup orders from standard subgroup "
                   "structure tables; screening-only bundle",
        maximals=[gm.maximal_entry(nm, index=CO1_ORDER // o, order=o,
                                   provenance="order from standard subgroup "
                                              "structure tables")
                  for nm, o in CO1_MAXIMALS])


def author_b():
    pairs = []
    for nm, o in B_MAXIMALS:
        assert B_ORDER % o == 0, nm
        pairs.append((B_ORDER // o, o))
    screen_all("B", B_ORDER, pairs)
    gm.write_index_only_bundle(
        "b.json", name="B", order=B_ORDER,
        provenance="order and subgroup orders from standard subgroup "
                   "structure tables; screening-only bundle",
        maximals=[gm.maximal_entry(nm, index=B_ORDER // o, order=o,
                                   provenance="order from standard subgroup "
                                              "structure tables")
                  for nm, o in B_MAXIMALS])


def author_m():
    pairs = []
    for i in M_INDICES:
        assert M_ORDER % i == 0, i
        pairs.append((i, M_ORDER // i))
    screen_all("M", M_ORDER, pairs)
    gm.write_index_only_bundle(
        "m.json", name="M", order=M_ORDER,
        provenance="order from the standard prime factorization; maximal "
                   "class indices from published enumerations; class "
                   "identities not tracked",
        maximals=[gm.maximal_entry(f"class-{k + 1:02d}", index=i,
                                   provenance="index from published "
                                              "enumerations of maximal "
                                              "subgroup indices")
                  for k, (i, _) in enumerate(pairs)])


if __name__ == "__main__":
    author_fi23()
    author_co1()
    author_b()
    author_m()
    print("giant bundles done")
