#include "sizebias/bundled.hpp"

namespace sizebias::bundled {

namespace {

// 40 Ukrainian HEIs, Scopus, May 2019: publications and group h-index.
constexpr std::string_view kUkraine2019 = R"csv(unit_id,unit_name,n_publications,h_index
taras-shevchenko-national-university-of-kyiv,Taras Shevchenko National University of Kyiv,17349,90
v-n-karazin-kharkiv-national-university,V. N. Karazin Kharkiv National University,9452,70
ivan-franko-national-university-of-lviv,Ivan Franko National University of L'viv,6660,61
odessa-i-i-mechnikov-national-university,Odessa I.I.Mechnikov National University,3469,61
yuriy-fedkovych-chernivtsi-national-university,Yuriy Fedkovych Chernivtsi National University,3437,61
national-technical-university-of-ukraine-igor-sikorsky-kyiv-polytechnic-institute,"National Technical University of Ukraine ""Igor Sikorsky Kyiv Polytechnic Institute""",7748,54
donetsk-state-medical-university,Donetsk State Medical University,1255,46
national-technical-university-kharkiv-polytechnic-institute,National Technical University Kharkiv Polytechnic Institute,3775,43
oles-honchar-dnipro-national-university,Oles Honchar Dnipro National University,3671,43
danylo-halytsky-lviv-national-medical-university,Danylo Halytsky Lviv National Medical University,1025,42
lviv-polytechnic-national-university,Lviv Polytechnic National University,6338,42
sumy-state-university,Sumy State University,2339,39
vasyl-stefanyk-precarpathian-national-university,Vasyl Stefanyk Precarpathian National University,688,38
uzhgorod-national-university,Uzhgorod National University,2245,37
ukrainian-state-chemical-technology-university,Ukrainian State Chemical Technology University,1120,36
state-establishment-dnipropetrovsk-medical-academy-of-health-ministry-of-ukraine,State Establishment Dnipropetrovsk Medical Academy of Health Ministry of Ukraine,275,35
the-bohdan-khmelnytsky-national-university-of-cherkasy,The Bohdan Khmelnytsky National University of Cherkasy,455,35
v-i-vernadsky-crimean-federal-university,V.I. Vernadsky Crimean Federal University,2622,34
bogomolets-national-medical-university,Bogomolets National Medical University,741,33
national-university-of-kyiv-mohyla-academy,National University of Kyiv-Mohyla Academy,512,32
vasyl-stus-donetsk-national-university,Vasyl' Stus Donetsk National University,1817,32
national-aerospace-university-kharkiv-aviation-institute,"National Aerospace University ""Kharkiv Aviation Institute""",1303,30
kharkiv-national-university-of-radio-electronics,Kharkiv National University of Radio Electronics,3030,29
lesya-ukrainka-eastern-european-national-university,Lesya Ukrainka Eastern European National University,771,29
kharkiv-national-medical-university,Kharkiv National Medical University,596,27
national-university-of-life-and-environmental-sciences-of-ukraine,National University of Life and Environmental Sciences of Ukraine,872,26
donetsk-national-technical-university,Donetsk National Technical University,1336,25
sevastopol-state-university,Sevastopol State University,1128,24
national-aviation-university,National Aviation University,2033,21
national-university-of-food-technologies-of-ukraine,National University of Food Technologies of Ukraine,559,21
kyiv-national-university-of-technologies-and-design,Kyiv National University of Technologies and Design,486,20
odessa-national-polytechnic-university,Odessa National Polytechnic University,915,20
k-ushynsky-south-ukrainian-pedagogical-university,K. Ushynsky South Ukrainian Pedagogical University,306,19
donbass-state-engineering-academy,Donbass State Engineering Academy,377,18
ukrainian-national-forestry-university,Ukrainian National Forestry University,240,18
khmelnytsky-national-university,Khmelnytsky National University,419,17
kryvyi-rih-national-university,Kryvyi Rih National University,429,17
odessa-state-medical-university,Odessa State Medical University,387,15
pridneprovskaya-state-academy-of-building-and-architecture,Pridneprovskaya State Academy of Building and Architecture,150,14
volodymyr-dahl-east-ukrainian-national-university,Volodymyr Dahl East Ukrainian National University,503,13
)csv";

// 41 UK HEIs submitted to RAE2008 "Physics", Scopus 2001-2007, accessed March 2020.
constexpr std::string_view kUkRae2008Physics = R"csv(unit_id,unit_name,n_publications,h_index
university-of-cambridge,University of Cambridge,9602,250
university-of-oxford,University of Oxford,8129,207
imperial-college-london,Imperial College London,7186,203
university-of-durham,University of Durham,3208,178
university-college-london,University College London,4842,165
university-of-edinburgh,University of Edinburgh,2947,156
university-of-manchester,University of Manchester,5588,156
university-of-southampton,University of Southampton,4274,150
university-of-bristol,University of Bristol,3104,149
university-of-sheffield,University of Sheffield,3389,136
university-of-birmingham,University of Birmingham,2918,133
university-of-st-andrews,University of St Andrews,2003,130
university-of-nottingham,University of Nottingham,2609,128
university-of-leeds,University of Leeds,2687,126
university-of-glasgow,University of Glasgow,2604,125
queen-mary-university-of-london,"Queen Mary, University of London",2090,124
university-of-liverpool,University of Liverpool,2966,123
university-of-sussex,University of Sussex,1398,117
university-of-leicester,University of Leicester,1571,114
queens-university-belfast,Queen's University Belfast,1932,108
the-university-of-warwick,The University of Warwick,2226,99
cardiff-university,Cardiff University,1382,98
university-of-bath,University of Bath,1268,92
university-of-exeter,University of Exeter,1411,92
university-of-surrey,University of Surrey,2360,92
liverpool-john-moores-university,Liverpool John Moores University,616,91
university-of-strathclyde,University of Strathclyde,2115,90
lancaster-university,Lancaster University,1243,87
loughborough-university,Loughborough University,1455,83
heriot-watt-university,Heriot-Watt University,1358,79
royal-holloway-university-of-london,Royal Holloway University of London,664,78
university-of-hertfordshire,University of Hertfordshire,680,78
kings-college-london,King's College London,1117,77
university-of-york,University of York,1211,69
swansea-university,Swansea University,753,68
keele-university,Keele University,585,63
university-of-kent,University of Kent,578,61
university-of-central-lancashire,University of Central Lancashire,283,47
aberystwyth-university,Aberystwyth University,250,40
university-of-the-west-of-scotland,University of the West of Scotland,176,31
university-of-brighton,University of Brighton,117,29
)csv";

}  // namespace

std::vector<std::string_view> names() { return {"ukraine_2019", "uk_rae2008_physics"}; }

std::optional<std::string_view> summary_csv(std::string_view name) {
    if (name == "ukraine_2019") return kUkraine2019;
    if (name == "uk_rae2008_physics") return kUkRae2008Physics;
    return std::nullopt;
}

}  // namespace sizebias::bundled
