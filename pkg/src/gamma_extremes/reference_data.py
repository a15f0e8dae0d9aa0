"""Reference coefficient expansions for the two big sign certificates.

Even-power coefficients only (odd ones are identically zero); index i is
the coefficient of q^(2i). Used purely as spot-check / full-compare
expectations; the verifier always recomputes the expansions from the
defining formulas.
"""

V_PLUS_EVEN_COEFFS = [
    23565171557938261664962395,
    1985238765536369188253388462,
    76017937191609745093093565184,
    1815476155917282265018752272232,
    30868042081839055982554050213660,
    401897536051918258546845673711320,
    4195397709111549929883773768957292,
    36238699732610615067411794056699104,
    265002286089679374723172860122766982,
    1669237124849349342077586449716389470,
    9179934813394932229977676436328785920,
    44555295354320392501114611345123622400,
    192537160208281140648975165919934835200,
    746181252269526741637909507751082171520,
    2609372572626683435719917787491018652160,
    8276209631283583168755734561689661224960,
    23913569456882144063241575623509484876800,
    63185851825755484161960668172292699909120,
    153171842040744452342444666253152790732800,
    341628452529444844018632398179833131991040,
    702775058219816773204544225960017412751360,
    1336281286191807830241756821296507838955520,
    2352931028757956298911312671496544634142720,
    3842851078067257537573706091171559356497920,
    5829597689354288278514821031866786159656960,
    8224048629268397888867021111129844469596160,
    10800344227796355322915422778734559920914432,
    13214925874596962589048294078754839901241344,
    15075437985869745487585690312752934894436352,
    16043253396277674458218536937392302561689600,
    15933483495160554733717977505944446676500480,
    14772181225346687498328707734409833005187072,
    12786642631638024827680853914736629691449344,
    10333607587858511627607426462208954269171712,
    7796135691442288431829216828566360534548480,
    5489455045169343972022956242977322445045760,
    3606053976460179205452292516224406577479680,
    2208802483012122361676530694278736018145280,
    1260683716848402925787749700503070572544000,
    669904634456217504368236284579198848204800,
    331081492020125941589702200450146757509120,
    152001230583526972614803279225239581491200,
    64734238129983061042604032362158017740800,
    25531661312772564369272230408940525977600,
    9307900274880934185285303838052660019200,
    3129622227458365558314112917099983667200,
    968033669852811173795309928049750835200,
    274640462267821497605095290057418342400,
    71224038857339584104332613373237657600,
    16816854347488682979216179348688076800,
    3598246400042953802386878316412928000,
    693860503839280523254707460767744000,
    119794916777653504670468143054848000,
    18371891299642536871251828277248000,
    2478647665316721166509051740160000,
    290656583441325139861690122240000,
    29171448597603811259616067584000,
    2455470675466333890778497024000,
    168582129968383522599075840000,
    9065459012974557989437440000,
    358068461185282678456320000,
    9236522547766697656320000,
    116733302341443256320000,
]

V_MINUS_EVEN_COEFFS = [
    1058023271132626023,
    51541890229923566472,
    1213009372688989850064,
    18352820646596071930240,
    200442482186879766344000,
    1682464063207304317242816,
    11285809233594557704985856,
    62123650712872430361438720,
    286006349074965960756670464,
    1116988330180696358380290048,
    3741070988530167056939876352,
    10836728622922107883411734528,
    27330768999389436608140804096,
    60330629581678789398471114752,
    117040259220868123540341129216,
    200169684615441568277429485568,
    302487634652646366318853881856,
    404485176548048584076188188672,
    478958931700928292722105647104,
    502214198209105947113507782656,
    465950173145939141611449483264,
    381911302204202972478305206272,
    275855094787796630236532047872,
    174972859491619945161380855808,
    97001064005371803174963249152,
    46708058892337905269349548032,
    19376798019028218231165812736,
    6852048396846611541188935680,
    2036474622748306983572471808,
    499070059195604547617685504,
    98184545971566239935365120,
    14905936080354118622773248,
    1639091209276985243074560,
    116172982490204328689664,
    3984496719921263149056,
]
