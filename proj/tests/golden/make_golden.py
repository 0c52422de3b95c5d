#!/usr/bin/env python3
"""Recompute every table of the corpus40 fixture from the raw files and write
the expected markdown renders. Shares no code with the C++ engine; scipy
supplies the t distribution.

    python3 tests/golden/make_golden.py [fixture_dir] [out_dir]
"""
import csv
import json
import os
import re
import sys
import unicodedata
from collections import defaultdict
from statistics import mean, variance

from scipy import stats

HERE = os.path.dirname(os.path.abspath(__file__))
FIXTURE = sys.argv[1] if len(sys.argv) > 1 else os.path.join(HERE, "..", "fixtures", "corpus40")
OUT = sys.argv[2] if len(sys.argv) > 2 else HERE
YEARS = (2001, 2003)
HOME = "IT"
MIN_COLLAB = 3  # lowered from 7 so the fixture keeps more than one SDS
MIN_INDUSTRY = 1


def rows(name):
    with open(os.path.join(FIXTURE, name), newline="", encoding="utf-8") as f:
        return list(csv.DictReader(f))


tax = {r["sds_id"]: r for r in rows("taxonomy.csv")}
orgs = {r["org_id"]: r for r in rows("organizations.csv")}
roster = {r["researcher_id"]: r for r in rows("roster.csv")}
ifs = defaultdict(dict)  # journal -> year -> (if, cats)
for r in rows("journals.csv"):
    ifs[r["journal_id"]][int(r["year"])] = (float(r["impact_factor"]), sorted(r["sci_categories"].split(";")))


def norm(s):
    s = unicodedata.normalize("NFC", s).casefold()
    s = re.sub(r"[^\w\s]", "", s)
    toks = s.split()
    while toks and toks[-1] in {"spa", "srl", "snc", "sas", "inc", "ltd", "gmbh"}:
        toks.pop()
    return " ".join(toks)


alias = {norm(o["canonical_name"]): k for k, o in orgs.items()}
for r in rows("aliases.csv"):
    alias[norm(r["alias"])] = r["org_id"]

pubs = []
with open(os.path.join(FIXTURE, "publications.jsonl"), encoding="utf-8") as f:
    for line in f:
        p = json.loads(line)
        if not (YEARS[0] <= p["year"] <= YEARS[1]):
            continue
        addr = set(p["address_org_ids"])
        for raw in p.get("address_raw", []):
            if norm(raw) in alias:
                addr.add(alias[norm(raw)])
        p["addr"] = addr
        pubs.append(p)
pubs.sort(key=lambda p: p["pub_id"])


def record(jid, year):
    years = [y for y in ifs[jid] if YEARS[0] <= y <= YEARS[1]]
    if not years:
        return None
    return ifs[jid][min(years, key=lambda y: (abs(y - year), y))]


def pct(vals, v):
    return 100.0 * (sum(w < v for w in vals) + 0.5 * sum(w == v for w in vals)) / len(vals)


def ifpr(p):
    own = record(p["journal_id"], p["year"])
    ranks = []
    for cat in own[1]:
        peers = [rec[0] for j in ifs for rec in [record(j, p["year"])] if rec and cat in rec[1]]
        ranks.append(pct(peers, own[0]))
    return sum(ranks) / len(ranks)


for p in pubs:
    unis = {o for o in p["addr"] if orgs[o]["kind"] == "university"}
    firms = {o for o in p["addr"] if orgs[o]["kind"] == "private_firm" and orgs[o]["country"] == HOME}
    p["industry"] = len(unis) * len(firms) > 0
    p["collab"] = len(unis) >= 1 and len(p["addr"]) >= 2
    p["rids"] = sorted({a["researcher_id"] for a in p["authors"] if a["researcher_id"]})
    p["sds"] = sorted({roster[r]["sds_id"] for r in p["rids"]})
    p["uda"] = sorted({tax[s]["uda_id"] for s in p["sds"]})
    p["cats"] = record(p["journal_id"], p["year"])[1]
    p["ifpr"] = ifpr(p)
    p["unis"], p["firms"] = unis, firms


def fixed(v, d):
    s = "%.*f" % (d, v)
    return s[1:] if s.startswith("-") and set(s[1:]) <= set("0.") else s


def fmt_p(p):
    return "%.3e" % p if p < 1e-3 else fixed(p, 4)


def md_row(cells):
    return "|" + "".join(" %s |" % c for c in cells) + "\n"


# ranking tables
TITLES = {
    "count": "industry co-authored articles",
    "pct_all": "industry co-authored share of all articles (%)",
    "pct_coauth": "industry co-authored share of extramural-collaboration articles (%)",
    "per_researcher": "industry co-authored articles per researcher",
}


def intensity(level):
    out = {}
    for p in pubs:
        for s in p[level]:
            r = out.setdefault(s, {"n": 0, "co": 0, "ind": 0})
            r["n"] += 1
            r["co"] += p["collab"]
            r["ind"] += p["industry"]
    for s, r in out.items():
        key = "sds_id" if level == "sds" else "uda_id"
        r["head"] = sum(1 for x in roster.values() if tax[x["sds_id"]][key] == s)
        if level == "sds":
            r["name"], r["uda"], r["uda_name"] = tax[s]["sds_name"], tax[s]["uda_id"], tax[s]["uda_name"]
        else:
            nm = next(t["uda_name"] for t in tax.values() if t["uda_id"] == s)
            r["name"], r["uda"], r["uda_name"] = nm, s, nm
    return out


def rank_table(level, metric, k):
    rows_ = []
    for s, r in intensity(level).items():
        v = {"count": r["ind"],
             "pct_all": 100.0 * r["ind"] / r["n"],
             "pct_coauth": 100.0 * r["ind"] / r["co"] if r["co"] else None,
             "per_researcher": r["ind"] / r["head"] if r["head"] else None}[metric]
        if v is not None:
            rows_.append((v, s, r))
    rows_.sort(key=lambda x: (-x[0], x[2]["name"], x[1]))
    rows_ = rows_[:k]
    out = "### Top %d %s by %s\n\n" % (k, level.upper(), TITLES[metric])
    cols = ["rank", "sector_id", "value", "sector_name", "uda_id", "uda_name", "n_articles",
            "n_coauth", "n_industry_coauth", "headcount"]
    out += md_row(cols) + "|---:|---|---:|---|---|---|---:|---:|---:|---:|\n"
    for i, (v, s, r) in enumerate(rows_, 1):
        val = str(v) if metric == "count" else fixed(v, 3)
        out += md_row([i, s, val, r["name"], r["uda"], r["uda_name"], r["n"], r["co"], r["ind"], r["head"]])
    return out


# comparisons
SUBSET = {"all": "all publications", "collab": "extramural collaborations", "industry": "industry co-authored"}
INDLABEL = {"ifpr": "IF_pr", "ii_sds": "Ii_SDS", "ii_sci": "Ii_SCI", "o": "O_pr", "fss": "FSS_pr"}
SELECT = {"all": lambda p: True, "collab": lambda p: p["collab"], "industry": lambda p: p["industry"]}
VALUE = {"ifpr": lambda p: p["ifpr"], "ii_sds": lambda p: len(p["sds"]), "ii_sci": lambda p: len(p["cats"])}


def comparison_md(label_a, label_b, title, a, b, t, df, p1, p2, note):
    out = "### %s\n\n" % title
    out += md_row(["statistic", label_a, label_b]) + "|---|---:|---:|\n"
    out += md_row(["mean", fixed(mean(a), 3), fixed(mean(b), 3)])
    out += md_row(["variance", fixed(variance(a), 3), fixed(variance(b), 3)])
    out += md_row(["observations", len(a), len(b)])
    out += md_row(["t", "", fixed(t, 4)])
    out += md_row(["df", "", fixed(df, 3)])
    out += md_row(["p (one-tailed)", "", fmt_p(p1)])
    out += md_row(["p (two-tailed)", "", fmt_p(p2)])
    return out + "\nNote: %s.\n" % note


def tails(t, df):
    p1 = stats.t.cdf(-abs(t), df)
    return p1, 2 * p1


def paired(first, second, ind, floor, floor_text):
    by_cat = ind == "ii_sci"
    units = defaultdict(list)
    for p in pubs:
        for u in (p["cats"] if by_cat else p["sds"]):
            units[u].append(p)
    xs, ys, excluded = [], [], 0
    for u in sorted(units):
        a = [VALUE[ind](p) for p in units[u] if SELECT[first](p)]
        b = [VALUE[ind](p) for p in units[u] if SELECT[second](p)]
        if len(b) < max(floor, 1) or not a:
            excluded += 1
            continue
        xs.append(mean(a))
        ys.append(mean(b))
    la, lb = INDLABEL[ind] + " of " + SUBSET[first], INDLABEL[ind] + " of " + SUBSET[second]
    note = "excludes %d of %d %s with fewer than %d %s" % (
        excluded, len(units), "SCI categories" if by_cat else "SDSs", max(floor, 1), floor_text)
    if len(xs) < 2:
        return "unavailable: InsufficientSectors: %d unit(s) left; %s\n" % (len(xs), note)
    r = stats.ttest_rel(xs, ys)
    p1, p2 = tails(r.statistic, len(xs) - 1)
    title = "%s vs %s (paired t over %s means)" % (la, lb, "SCI category" if by_cat else "SDS")
    return comparison_md(la, lb, title, xs, ys, r.statistic, len(xs) - 1, p1, p2, note)


def researchers(ind):
    active = {s for p in pubs for s in p["sds"]}
    pop = [r for r in sorted(roster) if roster[r]["sds_id"] in active]
    o = {r: sum(r in p["rids"] for p in pubs) for r in pop}
    fss = {r: sum(p["ifpr"] / 100 / len(p["authors"]) for p in pubs if r in p["rids"]) for r in pop}
    vals = o if ind == "o" else fss
    pr = {}
    for r in pop:
        peers = [vals[q] for q in pop if roster[q]["sds_id"] == roster[r]["sds_id"]]
        pr[r] = pct(peers, vals[r])
    ind_set = {r for p in pubs if p["industry"] for r in p["rids"]}
    a = [pr[r] for r in pop if r in ind_set]
    b = [pr[r] for r in pop if r not in ind_set]
    r = stats.ttest_ind(a, b, equal_var=False)
    va, vb = variance(a) / len(a), variance(b) / len(b)
    df = (va + vb) ** 2 / (va ** 2 / (len(a) - 1) + vb ** 2 / (len(b) - 1))
    p1, p2 = tails(r.statistic, df)
    lab = INDLABEL[ind]
    la, lb = lab + " of researchers who collaborated with industry", lab + " of the other researchers"
    note = ("population: researchers of the %d SDSs with at least 1 article; excludes %d researchers "
            "of SDSs without articles" % (len(active), len(roster) - len(pop)))
    return comparison_md(la, lb, "%s vs %s (Welch t over researchers)" % (la, lb), a, b, r.statistic, df, p1, p2, note)


IND_FLOOR = "industry co-authored publications"
tables = {
    "table1_uda_count": rank_table("uda", "count", 4),
    "table1_uda_pct_all": rank_table("uda", "pct_all", 4),
    "table1_uda_pct_coauth": rank_table("uda", "pct_coauth", 4),
    "table2_sds_count": rank_table("sds", "count", 10),
    "table3_sds_pct_all": rank_table("sds", "pct_all", 10),
    "table4_sds_pct_coauth": rank_table("sds", "pct_coauth", 10),
    "table5_sds_per_researcher": rank_table("sds", "per_researcher", 10),
    "table6_sds_all_vs_collab_ifpr": paired("all", "collab", "ifpr", MIN_COLLAB,
                                            "extramural-collaboration publications"),
    "table7_sds_all_vs_industry_ifpr": paired("all", "industry", "ifpr", MIN_INDUSTRY, IND_FLOOR),
    "table8_researchers_o": researchers("o"),
    "table8_researchers_fss": researchers("fss"),
    "table9_multidisc_all_vs_industry_ii_sds": paired("all", "industry", "ii_sds", MIN_INDUSTRY, IND_FLOOR),
    "table9_multidisc_all_vs_industry_ii_sci": paired("all", "industry", "ii_sci", MIN_INDUSTRY, IND_FLOOR),
    "table10_multidisc_collab_vs_industry_ii_sds": paired("collab", "industry", "ii_sds", MIN_INDUSTRY, IND_FLOOR),
    "table10_multidisc_collab_vs_industry_ii_sci": paired("collab", "industry", "ii_sci", MIN_INDUSTRY, IND_FLOOR),
}
# the unlowered floor leaves no SDS on the fixture
tables["table6_default_threshold"] = paired("all", "collab", "ifpr", 7, "extramural-collaboration publications")

for name, body in tables.items():
    with open(os.path.join(OUT, name + ".md"), "w", encoding="utf-8", newline="\n") as f:
        f.write(body)
print("wrote %d goldens" % len(tables))
