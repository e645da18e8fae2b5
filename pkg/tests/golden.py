"""Listings of the two worked instances, kept in their original notation."""

import re

from pseudosym.local_algebra import parse_binomial
from pseudosym.unipoly import UniPoly

SMALL = (21, 11, 7, 4, 5)
LARGE = (60, 20, 8, 6, 10)

SMALL_MEMBERS = [
    r"g_{0,0}=X_2X_4^3-X_1^6X_3^6",
    r"f_{1,0}=X_3X_4^3-X_1^{21}",
    r"f_4=X_4^4-X_1X_2^{10}X_3^6",
    r"f_2=X_1^5X_4-X_2^{11}",
    r"f_3=X_3^7-X1^{15}X_2",
    r"g_{1,0}=X_2^{12}X_4^2-X_1^{11}X_3^6",
    r"f_{1,1}=X_2^{11}X_3X_4^2-X_1^{26}",
    r"g_{2,0}=X_1^{16}X_3^6-X_2^{23}X_4",
    r"f_{1,2}=X_2^{22}X_3X_4-X_1^{31}",
    r"f_{1,3}=X_2^{33}X_3-X_1^{36}",
    r"g_{2,1}=X_1^{52}X_3^5-X_2^{56}X_4",
    r"g_{2,2}=X_2^{89}X_4-X_1^{88}X_3^4",
    r"g_{3,2}=X_1^{93}X_3^4-X_2^{100}",
    r"g_{3,3}=X_1^{129}X_3^3-X_2^{133}",
    r"g_{3,4}=X_2^{166}-X_1^{165}X_3^2",
]
SMALL_P = (
    r"1 -3 t^4+3 t^5-2 t^6- t^7+ 3 t^9 -2 t^{10} + t^{11}+ t^{13}"
    r"-2 t^{14}+2 t^{15}- t^{16}+2 t^{19}-2 t^{20}- t^{22}+2 t^{23}"
    r"-2 t^{24}+ t^{26}+t^{29}- t^{31}- t^{34}+ t^{36}+ t^{40}- t^{41}"
    r"+t^{55}-2 t^{56}+2 t^{58}-t^{59}+ t^{95}-2 t^{96}+2 t^{98}- t^{99}"
    r"+ t^{130}-2 t^{131}+2 t^{133}- t^{134}+t^{165}-3 t^{166}"
    r"+3 t^{167} -t^{168}"
)
SMALL_Q = (
    r"1 +3 t^1+ 6 t^2+ 10 t^3+ 12 t^4+15 t^5+ 17 t^6 +17 t^7+15 t^8"
    r"+14 t^9+12 t^{10}+10 t^{11}+8 t^{12}+7 t^{13}+5 t^{14}+4 t^{15}"
    r"+3 t^{16}+2 t^{17}+ t^{18}+2 t^{19}+3 t^{20}+4 t^{21}+4 t^{22}"
    r"+5 t^{23}+5 t^{24}+4 t^{25}+3 t^{26}+2 t^{27}+ t^{28}+ t^{29}"
    r"+2 t^{30}+3 t^{31}+4 t^{32}+5 t^{33}+5 t^{34}+4 t^{35}+3 t^{36}"
    r"+2 t^{37}+ t^{38}+ t^{55}+ t^{56}+ t^{95}+ t^{96}+ t^{130}"
    r"+ t^{131} + t^{165}"
)

LARGE_MEMBERS = [
    r"g_{0,0}=X_2X_4^5-X_1^{11}X_3^7",
    r"f_{1,0}=X_3X_4^5-X_1^{60}",
    r"f_4=X_4^6-X_1X_2^{19}X_3^7",
    r"f_3=X_3^8-X_1^{49}X_2",
    r"f_2=X_1^{10}X_4-X_2^{20}",
    r"g_{1,0}=X_2^{21}X_4^4-X_1^{21}X_3^7",
    r"f_{1,1}=X_2^{20}X_3X_4^4-X_1^{70}",
    r"g_{2,0}=X_1^{31}X_3^7-X_2^{41}X_4^3",
    r"f_{1,2}=X_2^{40}X_3X_4^3-X_1^{80}",
    r"f_{1,3}=X_2^{60}X_3X_4^2-X_1^{90}",
    r"f_{1,4}=X_2^{80}X_3X_4-X_1^{100}",
    r"f_{1,5}=X_2^{100}X_3-X_1^{110}",
    r"g_{2,1}=X_2^{141}X_4^3-X_1^{141}X_3^6",
    r"g_{3,1}=X_1^{151}X_3^6-X_2^{161}X_4^2",
    r"g_{3,2}=X_2^{261}X_4^2-X_1^{261}X_3^5",
    r"g_{4,2}=X_1^{271}X_3^5-X_2^{281}X_4",
    r"g_{4,3}=X_2^{381}X_4-X_1^{381}X_3^4",
    r"g_{5,3}=X_1^{391}X_3^4-X_2^{401}",
    r"g_{5,4}=X_2^{501}-X_1^{501}X_3^3",
]
LARGE_P = (
    r"1 -3 t^{6}+3 t^7-2 t^8-t^{11}+t^{13}+3 t^{16}-3 t^{17}+t^{18}"
    r"+t^{19}-t^{23}-2 t^{25}+3 t^{26}- t^{27}+t^{32}-t^{33}+2 t^{35}"
    r"-3 t^{36}+t^{37}-t^{38}+2 t^{39} -t^{40}-t^{42}+t^{43}-t^{44}"
    r"+t^{45}+t^{51}-t^{52}+t^{54}-t^{55}-t^{61}+t^{62}-t^{63}+t^{64}"
    r"+t^{70}-t^{71}+t^{73}-t^{74}-t^{80}+t^{81}-t^{82}+t^{83}+t^{89}"
    r"-t^{90}+t^{92}-t^{93}-t^{99}+t^{100}-t^{101}+t^{102}+t^{108}"
    r"-t^{109}+t^{138}-2 t^{139}+t^{140}-t^{144}+2 t^{145}- t^{146}"
    r"+t^{154}-2 t^{155}+t^{156}-t^{157}+2 t^{158}-t^{159}+t^{257}"
    r"-2 t^{258}+t^{259}-t^{263}+2 t^{264}-t^{265}+t^{273}-2 t^{274}"
    r"+t^{275}-t^{276}+2 t^{277}-t^{278}+t^{376}-2 t^{377}+t^{378}"
    r"-t^{382}+2 t^{383}-t^{384}+t^{392}-2 t^{393}+t^{394}-t^{395}"
    r"+2 t^{396}-t^{397}+t^{495}-2 t^{496}+t^{497}-t^{501}+2 t^{502}"
    r"-t^{503}"
)
LARGE_Q = (
    r"1 + 3 t + 6 t^2+10 t^3 +15 t^4 +21 t^5+25 t^6 +30 t^7 +34 t^8 "
    r"+37 t^9 +39 t^{10} + 39 t^{11} +37 t^{12} + 34 t^{13} + 30 t^{14} "
    r"+25 t^{15} + 22 t^{16} +18 t^{17} +14 t^{18} +11 t^{19} +9 t^{20} "
    r"+8 t^{21} +8 t^{22}+8 t^{23}+8 t^{24}+6 t^{25}+5 t^{26}+4 t^{27}"
    r"+3 t^{28}+2 t^{29}+t^{30}+2 t^{35}+3 t^{36}+4 t^{37}+4 t^{38}"
    r"+5 t^{39}+6 t^{40}+7 t^{41}+7 t^{42}+7 t^{43}+6 t^{44}+5 t^{45}"
    r"+4 t^{46}+3 t^{47}+2 t^{48}+t^{49}+t^{54}+2 t^{55}+3 t^{56}"
    r"+4 t^{57}+5 t^{58}+6 t^{59}+7 t^{60}+7 t^{61}+7 t^{62}+6 t^{63}"
    r"+5 t^{64}+4 t^{65}+3 t^{66}+2 t^{67}+t^{68}+ t^{73}+2 t^{74}"
    r"+3 t^{75}+4 t^{76}+5 t^{77}+6 t^{78}+7 t^{79}+7 t^{80}+7 t^{81}"
    r"+6 t^{82}+5 t^{83}+4 t^{84}+3 t^{85}+2 t^{86}+t^{87}+ t^{92}"
    r"+2 t^{93}+3 t^{94}+4 t^{95}+5 t^{96}+6 t^{97}+7 t^{98}+7 t^{99}"
    r"+7 t^{100}+6 t^{101}+5 t^{102}+4 t^{103}+3 t^{104}+2 t^{105}"
    r"+t^{106} +t^{138}+t^{139}+t^{140}+t^{141}+t^{142}+t^{143}+t^{154}"
    r"+t^{155}+t^{156}+t^{257}+t^{258}+t^{259}+t^{260}+t^{261}+ t^{262}"
    r"+t^{273}+t^{274}+t^{275}+t^{376}+t^{377}+t^{378}+t^{379}+t^{380}"
    r"+t^{381}+t^{392}+t^{393}+t^{394}+t^{495}+t^{496}+t^{497}+t^{498}"
    r"+t^{499}+t^{500}"
)


_TERM = re.compile(r"([+-]?)\s*(\d*)\s*(t(?:\^\{?(\d+)\}?)?)?")


def parse_series(text):
    """``1 -3 t^4+ t^{11}`` -> UniPoly."""
    terms = {}
    for chunk in re.split(r"(?=[+-])", text.replace(" ", "")):
        if not chunk:
            continue
        m = _TERM.fullmatch(chunk)
        if m is None:
            raise ValueError(f"bad term {chunk!r}")
        sign, coeff, var, exp = m.groups()
        c = int(coeff) if coeff else 1
        if sign == "-":
            c = -c
        e = 0 if not var else int(exp or 1)
        terms[e] = terms.get(e, 0) + c
    return UniPoly.from_terms(terms.items())


def parse_members(items):
    """Name -> (written lead, written tail)."""
    out = {}
    for item in items:
        name, body = item.split("=")
        out[name] = parse_binomial(body)
    return out
