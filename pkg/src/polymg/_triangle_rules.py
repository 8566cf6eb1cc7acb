"""Symmetric triangle quadrature tables on the reference triangle (0,0), (1,0), (0,1).

Xiao-Gimbutas rules, degrees 1-20; all weights positive and summing to 1/2.
Generated once from FEniCS basix; kept as literals so there is no runtime dependency.
"""

TRIANGLE_RULES = {
    1: (
        [
            (0.3333333333333333, 0.3333333333333333),
        ],
        [
            0.5,
        ],
    ),
    2: (
        [
            (0.16666666666666666, 0.16666666666666666),
            (0.16666666666666666, 0.6666666666666667),
            (0.6666666666666667, 0.16666666666666666),
        ],
        [
            0.16666666666666666,
            0.16666666666666666,
            0.16666666666666666,
        ],
    ),
    3: (
        [
            (0.4459484909159649, 0.4459484909159649),
            (0.09157621350977085, 0.09157621350977085),
            (0.4459484909159649, 0.10810301816807022),
            (0.09157621350977085, 0.8168475729804583),
            (0.10810301816807022, 0.4459484909159649),
            (0.8168475729804583, 0.09157621350977085),
        ],
        [
            0.11169079483900574,
            0.05497587182766094,
            0.11169079483900574,
            0.05497587182766094,
            0.11169079483900574,
            0.05497587182766094,
        ],
    ),
    4: (
        [
            (0.4459484909159649, 0.4459484909159649),
            (0.09157621350977085, 0.09157621350977085),
            (0.4459484909159649, 0.10810301816807022),
            (0.09157621350977085, 0.8168475729804583),
            (0.10810301816807022, 0.4459484909159649),
            (0.8168475729804583, 0.09157621350977085),
        ],
        [
            0.11169079483900574,
            0.05497587182766094,
            0.11169079483900574,
            0.05497587182766094,
            0.11169079483900574,
            0.05497587182766094,
        ],
    ),
    5: (
        [
            (0.3333333333333333, 0.3333333333333333),
            (0.1012865073234564, 0.1012865073234564),
            (0.47014206410511505, 0.47014206410511505),
            (0.1012865073234564, 0.7974269853530872),
            (0.47014206410511505, 0.05971587178976989),
            (0.7974269853530872, 0.1012865073234564),
            (0.05971587178976989, 0.47014206410511505),
        ],
        [
            0.1125,
            0.06296959027241357,
            0.0661970763942531,
            0.06296959027241357,
            0.0661970763942531,
            0.06296959027241357,
            0.0661970763942531,
        ],
    ),
    6: (
        [
            (0.21942998254978302, 0.21942998254978302),
            (0.48013796411221504, 0.48013796411221504),
            (0.21942998254978302, 0.561140034900434),
            (0.48013796411221504, 0.039724071775569914),
            (0.561140034900434, 0.21942998254978302),
            (0.039724071775569914, 0.48013796411221504),
            (0.019371724361240805, 0.14161901592396814),
            (0.8390092597147911, 0.019371724361240805),
            (0.14161901592396814, 0.8390092597147911),
            (0.14161901592396814, 0.019371724361240805),
            (0.8390092597147911, 0.14161901592396814),
            (0.019371724361240805, 0.8390092597147911),
        ],
        [
            0.08566656207649052,
            0.04036554479651549,
            0.08566656207649052,
            0.04036554479651549,
            0.08566656207649052,
            0.04036554479651549,
            0.02031727989683033,
            0.02031727989683033,
            0.02031727989683033,
            0.02031727989683033,
            0.02031727989683033,
            0.02031727989683033,
        ],
    ),
    7: (
        [
            (0.47319565368925104, 0.47319565368925104),
            (0.057797640054506494, 0.057797640054506494),
            (0.24166360639724743, 0.24166360639724743),
            (0.47319565368925104, 0.05360869262149792),
            (0.057797640054506494, 0.884404719890987),
            (0.24166360639724743, 0.5166727872055051),
            (0.05360869262149792, 0.47319565368925104),
            (0.884404719890987, 0.057797640054506494),
            (0.5166727872055051, 0.24166360639724743),
            (0.046971206130085534, 0.2593390118657857),
            (0.6936897820041288, 0.046971206130085534),
            (0.2593390118657857, 0.6936897820041288),
            (0.2593390118657857, 0.046971206130085534),
            (0.6936897820041288, 0.2593390118657857),
            (0.046971206130085534, 0.6936897820041288),
        ],
        [
            0.02659041664838023,
            0.020459085197028434,
            0.06386262428056692,
            0.02659041664838023,
            0.020459085197028434,
            0.06386262428056692,
            0.02659041664838023,
            0.020459085197028434,
            0.06386262428056692,
            0.027877270270345547,
            0.027877270270345547,
            0.027877270270345547,
            0.027877270270345547,
            0.027877270270345547,
            0.027877270270345547,
        ],
    ),
    8: (
        [
            (0.3333333333333333, 0.3333333333333333),
            (0.17056930775176027, 0.17056930775176027),
            (0.4592925882927231, 0.4592925882927231),
            (0.05054722831703107, 0.05054722831703107),
            (0.17056930775176027, 0.6588613844964795),
            (0.4592925882927231, 0.08141482341455375),
            (0.05054722831703107, 0.8989055433659379),
            (0.6588613844964795, 0.17056930775176027),
            (0.08141482341455375, 0.4592925882927231),
            (0.8989055433659379, 0.05054722831703107),
            (0.008394777409957675, 0.26311282963463806),
            (0.7284923929554044, 0.008394777409957675),
            (0.26311282963463806, 0.7284923929554044),
            (0.26311282963463806, 0.008394777409957675),
            (0.7284923929554044, 0.26311282963463806),
            (0.008394777409957675, 0.7284923929554044),
        ],
        [
            0.0721578038388936,
            0.05160868526735912,
            0.04754581713364232,
            0.01622924881159904,
            0.05160868526735912,
            0.04754581713364232,
            0.01622924881159904,
            0.05160868526735912,
            0.04754581713364232,
            0.01622924881159904,
            0.013615157087217498,
            0.013615157087217498,
            0.013615157087217498,
            0.013615157087217498,
            0.013615157087217498,
            0.013615157087217498,
        ],
    ),
    9: (
        [
            (0.3333333333333333, 0.3333333333333333),
            (0.4896825191987376, 0.4896825191987376),
            (0.1882035356190328, 0.1882035356190328),
            (0.43708959149293664, 0.43708959149293664),
            (0.04472951339445275, 0.04472951339445275),
            (0.4896825191987376, 0.02063496160252476),
            (0.1882035356190328, 0.6235929287619344),
            (0.43708959149293664, 0.12582081701412673),
            (0.04472951339445275, 0.9105409732110945),
            (0.02063496160252476, 0.4896825191987376),
            (0.6235929287619344, 0.1882035356190328),
            (0.12582081701412673, 0.43708959149293664),
            (0.9105409732110945, 0.04472951339445275),
            (0.0368384120547363, 0.2219629891607657),
            (0.741198598784498, 0.0368384120547363),
            (0.2219629891607657, 0.741198598784498),
            (0.2219629891607657, 0.0368384120547363),
            (0.741198598784498, 0.2219629891607657),
            (0.0368384120547363, 0.741198598784498),
        ],
        [
            0.04856789814139942,
            0.015667350113569536,
            0.03982386946360513,
            0.03891377050238714,
            0.012788837829349017,
            0.015667350113569536,
            0.03982386946360513,
            0.03891377050238714,
            0.012788837829349017,
            0.015667350113569536,
            0.03982386946360513,
            0.03891377050238714,
            0.012788837829349017,
            0.021641769688644688,
            0.021641769688644688,
            0.021641769688644688,
            0.021641769688644688,
            0.021641769688644688,
            0.021641769688644688,
        ],
    ),
    10: (
        [
            (0.3333333333333333, 0.3333333333333333),
            (0.4951734598011705, 0.4951734598011705),
            (0.019139415242841296, 0.019139415242841296),
            (0.18448501268524653, 0.18448501268524653),
            (0.42823482094371884, 0.42823482094371884),
            (0.4951734598011705, 0.009653080397658997),
            (0.019139415242841296, 0.9617211695143174),
            (0.18448501268524653, 0.6310299746295069),
            (0.42823482094371884, 0.14353035811256232),
            (0.009653080397658997, 0.4951734598011705),
            (0.9617211695143174, 0.019139415242841296),
            (0.6310299746295069, 0.18448501268524653),
            (0.14353035811256232, 0.42823482094371884),
            (0.03472362048232748, 0.13373475510086913),
            (0.03758272734119169, 0.3266931362813369),
            (0.8315416244168035, 0.03472362048232748),
            (0.6357241363774714, 0.03758272734119169),
            (0.13373475510086913, 0.8315416244168035),
            (0.3266931362813369, 0.6357241363774714),
            (0.13373475510086913, 0.03472362048232748),
            (0.3266931362813369, 0.03758272734119169),
            (0.8315416244168035, 0.13373475510086913),
            (0.6357241363774714, 0.3266931362813369),
            (0.03472362048232748, 0.8315416244168035),
            (0.03758272734119169, 0.6357241363774714),
        ],
        [
            0.041807437186986963,
            0.004896295249209152,
            0.003192679615059327,
            0.039316884873188636,
            0.03762366398427199,
            0.004896295249209152,
            0.003192679615059327,
            0.039316884873188636,
            0.03762366398427199,
            0.004896295249209152,
            0.003192679615059327,
            0.039316884873188636,
            0.03762366398427199,
            0.014481140731628171,
            0.019369524543009452,
            0.014481140731628171,
            0.019369524543009452,
            0.014481140731628171,
            0.019369524543009452,
            0.014481140731628171,
            0.019369524543009452,
            0.014481140731628171,
            0.019369524543009452,
            0.014481140731628171,
            0.019369524543009452,
        ],
    ),
    11: (
        [
            (0.3333333333333333, 0.3333333333333333),
            (0.030846895635588123, 0.030846895635588123),
            (0.49878016517846074, 0.49878016517846074),
            (0.11320782728669404, 0.11320782728669404),
            (0.4366550163931761, 0.4366550163931761),
            (0.21448345861926937, 0.21448345861926937),
            (0.030846895635588123, 0.9383062087288238),
            (0.49878016517846074, 0.0024396696430785125),
            (0.11320782728669404, 0.7735843454266119),
            (0.4366550163931761, 0.12668996721364778),
            (0.21448345861926937, 0.5710330827614613),
            (0.9383062087288238, 0.030846895635588123),
            (0.0024396696430785125, 0.49878016517846074),
            (0.7735843454266119, 0.11320782728669404),
            (0.12668996721364778, 0.4366550163931761),
            (0.5710330827614613, 0.21448345861926937),
            (0.014366662569555624, 0.1593036198376935),
            (0.04766406697215078, 0.31063121631346313),
            (0.8263297175927509, 0.014366662569555624),
            (0.6417047167143861, 0.04766406697215078),
            (0.1593036198376935, 0.8263297175927509),
            (0.31063121631346313, 0.6417047167143861),
            (0.1593036198376935, 0.014366662569555624),
            (0.31063121631346313, 0.04766406697215078),
            (0.8263297175927509, 0.1593036198376935),
            (0.6417047167143861, 0.31063121631346313),
            (0.014366662569555624, 0.8263297175927509),
            (0.04766406697215078, 0.6417047167143861),
        ],
        [
            0.040722567354675644,
            0.006124648475353982,
            0.0062327459369406904,
            0.02006462119065416,
            0.031547436079949344,
            0.033922553871847574,
            0.006124648475353982,
            0.0062327459369406904,
            0.02006462119065416,
            0.031547436079949344,
            0.033922553871847574,
            0.006124648475353982,
            0.0062327459369406904,
            0.02006462119065416,
            0.031547436079949344,
            0.033922553871847574,
            0.007278811668904623,
            0.020321424327943236,
            0.007278811668904623,
            0.020321424327943236,
            0.007278811668904623,
            0.020321424327943236,
            0.007278811668904623,
            0.020321424327943236,
            0.007278811668904623,
            0.020321424327943236,
            0.007278811668904623,
            0.020321424327943236,
        ],
    ),
    12: (
        [
            (0.27146250701492614, 0.27146250701492614),
            (0.10925782765935432, 0.10925782765935432),
            (0.4401116486585931, 0.4401116486585931),
            (0.4882037509455415, 0.4882037509455415),
            (0.02464636343633564, 0.02464636343633564),
            (0.27146250701492614, 0.45707498597014773),
            (0.10925782765935432, 0.7814843446812914),
            (0.4401116486585931, 0.11977670268281382),
            (0.4882037509455415, 0.02359249810891695),
            (0.02464636343633564, 0.9507072731273287),
            (0.45707498597014773, 0.27146250701492614),
            (0.7814843446812914, 0.10925782765935432),
            (0.11977670268281382, 0.4401116486585931),
            (0.02359249810891695, 0.4882037509455415),
            (0.9507072731273287, 0.02464636343633564),
            (0.1162960196779266, 0.25545422863851736),
            (0.021382490256170623, 0.12727971723358936),
            (0.023034156355267166, 0.29165567973834094),
            (0.6282497516835561, 0.1162960196779266),
            (0.85133779251024, 0.021382490256170623),
            (0.6853101639063919, 0.023034156355267166),
            (0.25545422863851736, 0.6282497516835561),
            (0.12727971723358936, 0.85133779251024),
            (0.29165567973834094, 0.6853101639063919),
            (0.25545422863851736, 0.1162960196779266),
            (0.12727971723358936, 0.021382490256170623),
            (0.29165567973834094, 0.023034156355267166),
            (0.6282497516835561, 0.25545422863851736),
            (0.85133779251024, 0.12727971723358936),
            (0.6853101639063919, 0.29165567973834094),
            (0.1162960196779266, 0.6282497516835561),
            (0.021382490256170623, 0.85133779251024),
            (0.023034156355267166, 0.6853101639063919),
        ],
        [
            0.03127060659795138,
            0.014243026034438775,
            0.024959167464030475,
            0.012133419040726017,
            0.0039658212549868194,
            0.03127060659795138,
            0.014243026034438775,
            0.024959167464030475,
            0.012133419040726017,
            0.0039658212549868194,
            0.03127060659795138,
            0.014243026034438775,
            0.024959167464030475,
            0.012133419040726017,
            0.0039658212549868194,
            0.021613681829707104,
            0.007541838788255721,
            0.01089179251930378,
            0.021613681829707104,
            0.007541838788255721,
            0.01089179251930378,
            0.021613681829707104,
            0.007541838788255721,
            0.01089179251930378,
            0.021613681829707104,
            0.007541838788255721,
            0.01089179251930378,
            0.021613681829707104,
            0.007541838788255721,
            0.01089179251930378,
            0.021613681829707104,
            0.007541838788255721,
            0.01089179251930378,
        ],
    ),
    13: (
        [
            (0.3333333333333333, 0.3333333333333333),
            (0.4961358947410461, 0.4961358947410461),
            (0.4696086896534919, 0.4696086896534919),
            (0.23111028494908226, 0.23111028494908226),
            (0.4144775702790546, 0.4144775702790546),
            (0.11355991257213327, 0.11355991257213327),
            (0.024895931491216494, 0.024895931491216494),
            (0.4961358947410461, 0.007728210517907841),
            (0.4696086896534919, 0.06078262069301621),
            (0.23111028494908226, 0.5377794301018355),
            (0.4144775702790546, 0.17104485944189085),
            (0.11355991257213327, 0.7728801748557335),
            (0.024895931491216494, 0.950208137017567),
            (0.007728210517907841, 0.4961358947410461),
            (0.06078262069301621, 0.4696086896534919),
            (0.5377794301018355, 0.23111028494908226),
            (0.17104485944189085, 0.4144775702790546),
            (0.7728801748557335, 0.11355991257213327),
            (0.950208137017567, 0.024895931491216494),
            (0.01898800438375904, 0.2920786885766364),
            (0.09773603106601653, 0.26674525331035115),
            (0.021966344206529244, 0.1267997757838373),
            (0.6889333070396046, 0.01898800438375904),
            (0.6355187156236324, 0.09773603106601653),
            (0.8512338800096335, 0.021966344206529244),
            (0.2920786885766364, 0.6889333070396046),
            (0.26674525331035115, 0.6355187156236324),
            (0.1267997757838373, 0.8512338800096335),
            (0.2920786885766364, 0.01898800438375904),
            (0.26674525331035115, 0.09773603106601653),
            (0.1267997757838373, 0.021966344206529244),
            (0.6889333070396046, 0.2920786885766364),
            (0.6355187156236324, 0.26674525331035115),
            (0.8512338800096335, 0.1267997757838373),
            (0.01898800438375904, 0.6889333070396046),
            (0.09773603106601653, 0.6355187156236324),
            (0.021966344206529244, 0.8512338800096335),
        ],
        [
            0.02581132333214541,
            0.004970738180536294,
            0.01639062080186149,
            0.023031204796389124,
            0.0234735477710776,
            0.015451548987879897,
            0.0040146998976292115,
            0.004970738180536294,
            0.01639062080186149,
            0.023031204796389124,
            0.0234735477710776,
            0.015451548987879897,
            0.0040146998976292115,
            0.004970738180536294,
            0.01639062080186149,
            0.023031204796389124,
            0.0234735477710776,
            0.015451548987879897,
            0.0040146998976292115,
            0.00906274932310044,
            0.018605980228630768,
            0.007696536341891089,
            0.00906274932310044,
            0.018605980228630768,
            0.007696536341891089,
            0.00906274932310044,
            0.018605980228630768,
            0.007696536341891089,
            0.00906274932310044,
            0.018605980228630768,
            0.007696536341891089,
            0.00906274932310044,
            0.018605980228630768,
            0.007696536341891089,
            0.00906274932310044,
            0.018605980228630768,
            0.007696536341891089,
        ],
    ),
    14: (
        [
            (0.41764471934045394, 0.41764471934045394),
            (0.0617998830908727, 0.0617998830908727),
            (0.2734775283088387, 0.2734775283088387),
            (0.1772055324125435, 0.1772055324125435),
            (0.0193909612487011, 0.0193909612487011),
            (0.4889639103621786, 0.4889639103621786),
            (0.41764471934045394, 0.16471056131909212),
            (0.0617998830908727, 0.8764002338182546),
            (0.2734775283088387, 0.4530449433823226),
            (0.1772055324125435, 0.645588935174913),
            (0.0193909612487011, 0.9612180775025978),
            (0.4889639103621786, 0.022072179275642756),
            (0.16471056131909212, 0.41764471934045394),
            (0.8764002338182546, 0.0617998830908727),
            (0.4530449433823226, 0.2734775283088387),
            (0.645588935174913, 0.1772055324125435),
            (0.9612180775025978, 0.0193909612487011),
            (0.022072179275642756, 0.4889639103621786),
            (0.014646950055654471, 0.29837288213625773),
            (0.09291624935697185, 0.336861459796345),
            (0.05712475740364799, 0.17226668782135557),
            (0.001268330932872076, 0.11897449769695682),
            (0.6869801678080878, 0.014646950055654471),
            (0.5702222908466832, 0.09291624935697185),
            (0.7706085547749965, 0.05712475740364799),
            (0.8797571713701712, 0.001268330932872076),
            (0.29837288213625773, 0.6869801678080878),
            (0.336861459796345, 0.5702222908466832),
            (0.17226668782135557, 0.7706085547749965),
            (0.11897449769695682, 0.8797571713701712),
            (0.29837288213625773, 0.014646950055654471),
            (0.336861459796345, 0.09291624935697185),
            (0.17226668782135557, 0.05712475740364799),
            (0.11897449769695682, 0.001268330932872076),
            (0.6869801678080878, 0.29837288213625773),
            (0.5702222908466832, 0.336861459796345),
            (0.7706085547749965, 0.17226668782135557),
            (0.8797571713701712, 0.11897449769695682),
            (0.014646950055654471, 0.6869801678080878),
            (0.09291624935697185, 0.5702222908466832),
            (0.05712475740364799, 0.7706085547749965),
            (0.001268330932872076, 0.8797571713701712),
        ],
        [
            0.016394176772062678,
            0.007216849834888334,
            0.025887052253645793,
            0.02108129436849651,
            0.002461701801200041,
            0.010941790684714446,
            0.016394176772062678,
            0.007216849834888334,
            0.025887052253645793,
            0.02108129436849651,
            0.002461701801200041,
            0.010941790684714446,
            0.016394176772062678,
            0.007216849834888334,
            0.025887052253645793,
            0.02108129436849651,
            0.002461701801200041,
            0.010941790684714446,
            0.007218154056766921,
            0.019285755393530342,
            0.012332876606281839,
            0.002505114419250336,
            0.007218154056766921,
            0.019285755393530342,
            0.012332876606281839,
            0.002505114419250336,
            0.007218154056766921,
            0.019285755393530342,
            0.012332876606281839,
            0.002505114419250336,
            0.007218154056766921,
            0.019285755393530342,
            0.012332876606281839,
            0.002505114419250336,
            0.007218154056766921,
            0.019285755393530342,
            0.012332876606281839,
            0.002505114419250336,
            0.007218154056766921,
            0.019285755393530342,
            0.012332876606281839,
            0.002505114419250336,
        ],
    ),
    15: (
        [
            (0.3333333333333333, 0.3333333333333333),
            (0.1299782299330779, 0.1299782299330779),
            (0.4600769492970597, 0.4600769492970597),
            (0.4916858166302972, 0.4916858166302972),
            (0.22153234079514206, 0.22153234079514206),
            (0.39693373740906057, 0.39693373740906057),
            (0.0563419176961002, 0.0563419176961002),
            (0.1299782299330779, 0.7400435401338442),
            (0.4600769492970597, 0.07984610140588055),
            (0.4916858166302972, 0.016628366739405598),
            (0.22153234079514206, 0.5569353184097159),
            (0.39693373740906057, 0.20613252518187886),
            (0.0563419176961002, 0.8873161646077996),
            (0.7400435401338442, 0.1299782299330779),
            (0.07984610140588055, 0.4600769492970597),
            (0.016628366739405598, 0.4916858166302972),
            (0.5569353184097159, 0.22153234079514206),
            (0.20613252518187886, 0.39693373740906057),
            (0.8873161646077996, 0.0563419176961002),
            (0.08459422148219181, 0.18232178340719132),
            (0.016027089786345473, 0.15020038406523872),
            (0.09765044243024235, 0.32311131516371266),
            (0.018454251904633165, 0.3079476814836729),
            (0.0011135352740137417, 0.03803522930110929),
            (0.733083995110617, 0.08459422148219181),
            (0.8337725261484158, 0.016027089786345473),
            (0.5792382424060449, 0.09765044243024235),
            (0.673598066611694, 0.018454251904633165),
            (0.960851235424877, 0.0011135352740137417),
            (0.18232178340719132, 0.733083995110617),
            (0.15020038406523872, 0.8337725261484158),
            (0.32311131516371266, 0.5792382424060449),
            (0.3079476814836729, 0.673598066611694),
            (0.03803522930110929, 0.960851235424877),
            (0.18232178340719132, 0.08459422148219181),
            (0.15020038406523872, 0.016027089786345473),
            (0.32311131516371266, 0.09765044243024235),
            (0.3079476814836729, 0.018454251904633165),
            (0.03803522930110929, 0.0011135352740137417),
            (0.733083995110617, 0.18232178340719132),
            (0.8337725261484158, 0.15020038406523872),
            (0.5792382424060449, 0.32311131516371266),
            (0.673598066611694, 0.3079476814836729),
            (0.960851235424877, 0.03803522930110929),
            (0.08459422148219181, 0.733083995110617),
            (0.016027089786345473, 0.8337725261484158),
            (0.09765044243024235, 0.5792382424060449),
            (0.018454251904633165, 0.673598066611694),
            (0.0011135352740137417, 0.960851235424877),
        ],
        [
            0.01486520987403566,
            0.00369875203352305,
            0.010797043968219226,
            0.0079161381750109,
            0.023143643052599038,
            0.023168020695603617,
            0.007542237123798534,
            0.00369875203352305,
            0.010797043968219226,
            0.0079161381750109,
            0.023143643052599038,
            0.023168020695603617,
            0.007542237123798534,
            0.00369875203352305,
            0.010797043968219226,
            0.0079161381750109,
            0.023143643052599038,
            0.023168020695603617,
            0.007542237123798534,
            0.012115004391562803,
            0.00561425214943903,
            0.015537610235255475,
            0.008218381046413948,
            0.0012376330072789582,
            0.012115004391562803,
            0.00561425214943903,
            0.015537610235255475,
            0.008218381046413948,
            0.0012376330072789582,
            0.012115004391562803,
            0.00561425214943903,
            0.015537610235255475,
            0.008218381046413948,
            0.0012376330072789582,
            0.012115004391562803,
            0.00561425214943903,
            0.015537610235255475,
            0.008218381046413948,
            0.0012376330072789582,
            0.012115004391562803,
            0.00561425214943903,
            0.015537610235255475,
            0.008218381046413948,
            0.0012376330072789582,
            0.012115004391562803,
            0.00561425214943903,
            0.015537610235255475,
            0.008218381046413948,
            0.0012376330072789582,
        ],
    ),
    16: (
        [
            (0.3333333333333333, 0.3333333333333333),
            (0.06667447224023837, 0.06667447224023837),
            (0.24132168070137838, 0.24132168070137838),
            (0.41279809595522365, 0.41279809595522365),
            (0.15006373658703515, 0.15006373658703515),
            (0.46954803099668496, 0.46954803099668496),
            (0.017041629405718517, 0.017041629405718517),
            (0.06667447224023837, 0.8666510555195233),
            (0.24132168070137838, 0.5173566385972432),
            (0.41279809595522365, 0.1744038080895527),
            (0.15006373658703515, 0.6998725268259297),
            (0.46954803099668496, 0.060903938006630076),
            (0.017041629405718517, 0.965916741188563),
            (0.8666510555195233, 0.06667447224023837),
            (0.5173566385972432, 0.24132168070137838),
            (0.1744038080895527, 0.41279809595522365),
            (0.6998725268259297, 0.15006373658703515),
            (0.060903938006630076, 0.46954803099668496),
            (0.965916741188563, 0.017041629405718517),
            (0.009664954403660254, 0.41376948582708517),
            (0.030305943355186365, 0.30417944822947973),
            (0.010812972776103751, 0.08960908902270585),
            (0.10665316053614844, 0.29661537240038294),
            (0.051354315344013114, 0.16976335515028973),
            (0.0036969427073556124, 0.21404877992584728),
            (0.5765655597692546, 0.009664954403660254),
            (0.6655146084153339, 0.030305943355186365),
            (0.8995779382011905, 0.010812972776103751),
            (0.5967314670634686, 0.10665316053614844),
            (0.7788823295056971, 0.051354315344013114),
            (0.7822542773667971, 0.0036969427073556124),
            (0.41376948582708517, 0.5765655597692546),
            (0.30417944822947973, 0.6655146084153339),
            (0.08960908902270585, 0.8995779382011905),
            (0.29661537240038294, 0.5967314670634686),
            (0.16976335515028973, 0.7788823295056971),
            (0.21404877992584728, 0.7822542773667971),
            (0.41376948582708517, 0.009664954403660254),
            (0.30417944822947973, 0.030305943355186365),
            (0.08960908902270585, 0.010812972776103751),
            (0.29661537240038294, 0.10665316053614844),
            (0.16976335515028973, 0.051354315344013114),
            (0.21404877992584728, 0.0036969427073556124),
            (0.5765655597692546, 0.41376948582708517),
            (0.6655146084153339, 0.30417944822947973),
            (0.8995779382011905, 0.08960908902270585),
            (0.5967314670634686, 0.29661537240038294),
            (0.7788823295056971, 0.16976335515028973),
            (0.7822542773667971, 0.21404877992584728),
            (0.009664954403660254, 0.5765655597692546),
            (0.030305943355186365, 0.6655146084153339),
            (0.010812972776103751, 0.8995779382011905),
            (0.10665316053614844, 0.5967314670634686),
            (0.051354315344013114, 0.7788823295056971),
            (0.0036969427073556124, 0.7822542773667971),
        ],
        [
            0.023113955157095672,
            0.006212712797780504,
            0.020592020534896276,
            0.020492609893407683,
            0.014391748351374455,
            0.013546834733855226,
            0.001894567619132111,
            0.006212712797780504,
            0.020592020534896276,
            0.020492609893407683,
            0.014391748351374455,
            0.013546834733855226,
            0.001894567619132111,
            0.006212712797780504,
            0.020592020534896276,
            0.020492609893407683,
            0.014391748351374455,
            0.013546834733855226,
            0.001894567619132111,
            0.004091105276611069,
            0.006991803562326784,
            0.0028759349852485795,
            0.015823030840991622,
            0.008826540523551642,
            0.0023073453198645673,
            0.004091105276611069,
            0.006991803562326784,
            0.0028759349852485795,
            0.015823030840991622,
            0.008826540523551642,
            0.0023073453198645673,
            0.004091105276611069,
            0.006991803562326784,
            0.0028759349852485795,
            0.015823030840991622,
            0.008826540523551642,
            0.0023073453198645673,
            0.004091105276611069,
            0.006991803562326784,
            0.0028759349852485795,
            0.015823030840991622,
            0.008826540523551642,
            0.0023073453198645673,
            0.004091105276611069,
            0.006991803562326784,
            0.0028759349852485795,
            0.015823030840991622,
            0.008826540523551642,
            0.0023073453198645673,
            0.004091105276611069,
            0.006991803562326784,
            0.0028759349852485795,
            0.015823030840991622,
            0.008826540523551642,
            0.0023073453198645673,
        ],
    ),
    17: (
        [
            (0.4171034443615992, 0.4171034443615992),
            (0.18035811626637066, 0.18035811626637066),
            (0.2857065024365867, 0.2857065024365867),
            (0.06665406347959701, 0.06665406347959701),
            (0.014755491660754072, 0.014755491660754072),
            (0.46559787161889027, 0.46559787161889027),
            (0.4171034443615992, 0.16579311127680163),
            (0.18035811626637066, 0.6392837674672587),
            (0.2857065024365867, 0.42858699512682663),
            (0.06665406347959701, 0.866691873040806),
            (0.014755491660754072, 0.9704890166784919),
            (0.46559787161889027, 0.06880425676221946),
            (0.16579311127680163, 0.4171034443615992),
            (0.6392837674672587, 0.18035811626637066),
            (0.42858699512682663, 0.2857065024365867),
            (0.866691873040806, 0.06665406347959701),
            (0.9704890166784919, 0.014755491660754072),
            (0.06880425676221946, 0.46559787161889027),
            (0.011575175903180683, 0.07250547079900238),
            (0.013229672760086951, 0.41547545929522905),
            (0.013135870834002753, 0.27179187005535477),
            (0.15750547792686992, 0.29921894247697034),
            (0.06734937786736123, 0.3062815917461865),
            (0.07804234056828245, 0.16872251349525944),
            (0.016017642362119337, 0.15919228747279268),
            (0.9159193532978169, 0.011575175903180683),
            (0.5712948679446841, 0.013229672760086951),
            (0.7150722591106424, 0.013135870834002753),
            (0.5432755795961598, 0.15750547792686992),
            (0.6263690303864522, 0.06734937786736123),
            (0.7532351459364581, 0.07804234056828245),
            (0.824790070165088, 0.016017642362119337),
            (0.07250547079900238, 0.9159193532978169),
            (0.41547545929522905, 0.5712948679446841),
            (0.27179187005535477, 0.7150722591106424),
            (0.29921894247697034, 0.5432755795961598),
            (0.3062815917461865, 0.6263690303864522),
            (0.16872251349525944, 0.7532351459364581),
            (0.15919228747279268, 0.824790070165088),
            (0.07250547079900238, 0.011575175903180683),
            (0.41547545929522905, 0.013229672760086951),
            (0.27179187005535477, 0.013135870834002753),
            (0.29921894247697034, 0.15750547792686992),
            (0.3062815917461865, 0.06734937786736123),
            (0.16872251349525944, 0.07804234056828245),
            (0.15919228747279268, 0.016017642362119337),
            (0.9159193532978169, 0.07250547079900238),
            (0.5712948679446841, 0.41547545929522905),
            (0.7150722591106424, 0.27179187005535477),
            (0.5432755795961598, 0.29921894247697034),
            (0.6263690303864522, 0.3062815917461865),
            (0.7532351459364581, 0.16872251349525944),
            (0.824790070165088, 0.15919228747279268),
            (0.011575175903180683, 0.9159193532978169),
            (0.013229672760086951, 0.5712948679446841),
            (0.013135870834002753, 0.7150722591106424),
            (0.15750547792686992, 0.5432755795961598),
            (0.06734937786736123, 0.6263690303864522),
            (0.07804234056828245, 0.7532351459364581),
            (0.016017642362119337, 0.824790070165088),
        ],
        [
            0.013655463264051053,
            0.013156315294008993,
            0.01885811857639764,
            0.006229500401152722,
            0.001386943788818821,
            0.01250972547524868,
            0.013655463264051053,
            0.013156315294008993,
            0.01885811857639764,
            0.006229500401152722,
            0.001386943788818821,
            0.01250972547524868,
            0.013655463264051053,
            0.013156315294008993,
            0.01885811857639764,
            0.006229500401152722,
            0.001386943788818821,
            0.01250972547524868,
            0.002292174200867934,
            0.005199219977919768,
            0.004346107250500596,
            0.013085812967668494,
            0.011243886273345534,
            0.01027894916022726,
            0.003989150102964797,
            0.002292174200867934,
            0.005199219977919768,
            0.004346107250500596,
            0.013085812967668494,
            0.011243886273345534,
            0.01027894916022726,
            0.003989150102964797,
            0.002292174200867934,
            0.005199219977919768,
            0.004346107250500596,
            0.013085812967668494,
            0.011243886273345534,
            0.01027894916022726,
            0.003989150102964797,
            0.002292174200867934,
            0.005199219977919768,
            0.004346107250500596,
            0.013085812967668494,
            0.011243886273345534,
            0.01027894916022726,
            0.003989150102964797,
            0.002292174200867934,
            0.005199219977919768,
            0.004346107250500596,
            0.013085812967668494,
            0.011243886273345534,
            0.01027894916022726,
            0.003989150102964797,
            0.002292174200867934,
            0.005199219977919768,
            0.004346107250500596,
            0.013085812967668494,
            0.011243886273345534,
            0.01027894916022726,
            0.003989150102964797,
        ],
    ),
    18: (
        [
            (0.3333333333333333, 0.3333333333333333),
            (0.4749182113240457, 0.4749182113240457),
            (0.15163850697260495, 0.15163850697260495),
            (0.4110671018759195, 0.4110671018759195),
            (0.2656146099053742, 0.2656146099053742),
            (0.0037589443410684376, 0.0037589443410684376),
            (0.072438705567333, 0.072438705567333),
            (0.4749182113240457, 0.05016357735190857),
            (0.15163850697260495, 0.6967229860547901),
            (0.4110671018759195, 0.177865796248161),
            (0.2656146099053742, 0.46877078018925156),
            (0.0037589443410684376, 0.9924821113178631),
            (0.072438705567333, 0.855122588865334),
            (0.05016357735190857, 0.4749182113240457),
            (0.6967229860547901, 0.15163850697260495),
            (0.177865796248161, 0.4110671018759195),
            (0.46877078018925156, 0.2656146099053742),
            (0.9924821113178631, 0.0037589443410684376),
            (0.855122588865334, 0.072438705567333),
            (0.09042704035434063, 0.3850440344131637),
            (0.012498932483495477, 0.04727614183265175),
            (0.05401173533902428, 0.30206195771287075),
            (0.010505018819241962, 0.2565061597742415),
            (0.06612245802840343, 0.17847912556588763),
            (0.14906691012577386, 0.2685733063960138),
            (0.011691824674667157, 0.41106566867461836),
            (0.014331524778941987, 0.1327788302713893),
            (0.5245289252324957, 0.09042704035434063),
            (0.9402249256838529, 0.012498932483495477),
            (0.6439263069481049, 0.05401173533902428),
            (0.7329888214065166, 0.010505018819241962),
            (0.7553984164057089, 0.06612245802840343),
            (0.5823597834782124, 0.14906691012577386),
            (0.5772425066507145, 0.011691824674667157),
            (0.8528896449496688, 0.014331524778941987),
            (0.3850440344131637, 0.5245289252324957),
            (0.04727614183265175, 0.9402249256838529),
            (0.30206195771287075, 0.6439263069481049),
            (0.2565061597742415, 0.7329888214065166),
            (0.17847912556588763, 0.7553984164057089),
            (0.2685733063960138, 0.5823597834782124),
            (0.41106566867461836, 0.5772425066507145),
            (0.1327788302713893, 0.8528896449496688),
            (0.3850440344131637, 0.09042704035434063),
            (0.04727614183265175, 0.012498932483495477),
            (0.30206195771287075, 0.05401173533902428),
            (0.2565061597742415, 0.010505018819241962),
            (0.17847912556588763, 0.06612245802840343),
            (0.2685733063960138, 0.14906691012577386),
            (0.41106566867461836, 0.011691824674667157),
            (0.1327788302713893, 0.014331524778941987),
            (0.5245289252324957, 0.3850440344131637),
            (0.9402249256838529, 0.04727614183265175),
            (0.6439263069481049, 0.30206195771287075),
            (0.7329888214065166, 0.2565061597742415),
            (0.7553984164057089, 0.17847912556588763),
            (0.5823597834782124, 0.2685733063960138),
            (0.5772425066507145, 0.41106566867461836),
            (0.8528896449496688, 0.1327788302713893),
            (0.09042704035434063, 0.5245289252324957),
            (0.012498932483495477, 0.9402249256838529),
            (0.05401173533902428, 0.6439263069481049),
            (0.010505018819241962, 0.7329888214065166),
            (0.06612245802840343, 0.7553984164057089),
            (0.14906691012577386, 0.5823597834782124),
            (0.011691824674667157, 0.5772425066507145),
            (0.014331524778941987, 0.8528896449496688),
        ],
        [
            0.01537426061955793,
            0.006553513745869378,
            0.0101591694227292,
            0.01673599702992395,
            0.015558198301003067,
            0.0002660028084738903,
            0.006895143302383471,
            0.006553513745869378,
            0.0101591694227292,
            0.01673599702992395,
            0.015558198301003067,
            0.0002660028084738903,
            0.006895143302383471,
            0.006553513745869378,
            0.0101591694227292,
            0.01673599702992395,
            0.015558198301003067,
            0.0002660028084738903,
            0.006895143302383471,
            0.007664129097276571,
            0.0021087583873722216,
            0.008182954206993283,
            0.0038649176400031137,
            0.00845582695874004,
            0.01379644324428974,
            0.004793062237180752,
            0.0038208524863598183,
            0.007664129097276571,
            0.0021087583873722216,
            0.008182954206993283,
            0.0038649176400031137,
            0.00845582695874004,
            0.01379644324428974,
            0.004793062237180752,
            0.0038208524863598183,
            0.007664129097276571,
            0.0021087583873722216,
            0.008182954206993283,
            0.0038649176400031137,
            0.00845582695874004,
            0.01379644324428974,
            0.004793062237180752,
            0.0038208524863598183,
            0.007664129097276571,
            0.0021087583873722216,
            0.008182954206993283,
            0.0038649176400031137,
            0.00845582695874004,
            0.01379644324428974,
            0.004793062237180752,
            0.0038208524863598183,
            0.007664129097276571,
            0.0021087583873722216,
            0.008182954206993283,
            0.0038649176400031137,
            0.00845582695874004,
            0.01379644324428974,
            0.004793062237180752,
            0.0038208524863598183,
            0.007664129097276571,
            0.0021087583873722216,
            0.008182954206993283,
            0.0038649176400031137,
            0.00845582695874004,
            0.01379644324428974,
            0.004793062237180752,
            0.0038208524863598183,
        ],
    ),
    19: (
        [
            (0.3333333333333333, 0.3333333333333333),
            (0.05252627985410363, 0.05252627985410363),
            (0.11144805571699878, 0.11144805571699878),
            (0.011639027327922657, 0.011639027327922657),
            (0.25516213315312486, 0.25516213315312486),
            (0.4039697179663861, 0.4039697179663861),
            (0.17817100607962755, 0.17817100607962755),
            (0.4591943889568276, 0.4591943889568276),
            (0.4925124498658742, 0.4925124498658742),
            (0.05252627985410363, 0.8949474402917927),
            (0.11144805571699878, 0.7771038885660024),
            (0.011639027327922657, 0.9767219453441547),
            (0.25516213315312486, 0.4896757336937503),
            (0.4039697179663861, 0.19206056406722782),
            (0.17817100607962755, 0.6436579878407449),
            (0.4591943889568276, 0.08161122208634475),
            (0.4925124498658742, 0.014975100268251551),
            (0.8949474402917927, 0.05252627985410363),
            (0.7771038885660024, 0.11144805571699878),
            (0.9767219453441547, 0.011639027327922657),
            (0.4896757336937503, 0.25516213315312486),
            (0.19206056406722782, 0.4039697179663861),
            (0.6436579878407449, 0.17817100607962755),
            (0.08161122208634475, 0.4591943889568276),
            (0.014975100268251551, 0.4925124498658742),
            (0.005005142352350433, 0.1424222825711269),
            (0.009777061438676854, 0.06008389996270236),
            (0.039142449434608845, 0.13070066996053453),
            (0.129312809767979, 0.31131838322398686),
            (0.07456118930435514, 0.22143394188911344),
            (0.04088831446497813, 0.3540259269997119),
            (0.014923638907438481, 0.24189410400689262),
            (0.0020691038491023883, 0.36462041433871),
            (0.8525725750765227, 0.005005142352350433),
            (0.9301390385986208, 0.009777061438676854),
            (0.8301568806048566, 0.039142449434608845),
            (0.5593688070080342, 0.129312809767979),
            (0.7040048688065313, 0.07456118930435514),
            (0.60508575853531, 0.04088831446497813),
            (0.7431822570856689, 0.014923638907438481),
            (0.6333104818121875, 0.0020691038491023883),
            (0.1424222825711269, 0.8525725750765227),
            (0.06008389996270236, 0.9301390385986208),
            (0.13070066996053453, 0.8301568806048566),
            (0.31131838322398686, 0.5593688070080342),
            (0.22143394188911344, 0.7040048688065313),
            (0.3540259269997119, 0.60508575853531),
            (0.24189410400689262, 0.7431822570856689),
            (0.36462041433871, 0.6333104818121875),
            (0.1424222825711269, 0.005005142352350433),
            (0.06008389996270236, 0.009777061438676854),
            (0.13070066996053453, 0.039142449434608845),
            (0.31131838322398686, 0.129312809767979),
            (0.22143394188911344, 0.07456118930435514),
            (0.3540259269997119, 0.04088831446497813),
            (0.24189410400689262, 0.014923638907438481),
            (0.36462041433871, 0.0020691038491023883),
            (0.8525725750765227, 0.1424222825711269),
            (0.9301390385986208, 0.06008389996270236),
            (0.8301568806048566, 0.13070066996053453),
            (0.5593688070080342, 0.31131838322398686),
            (0.7040048688065313, 0.22143394188911344),
            (0.60508575853531, 0.3540259269997119),
            (0.7431822570856689, 0.24189410400689262),
            (0.6333104818121875, 0.36462041433871),
            (0.005005142352350433, 0.8525725750765227),
            (0.009777061438676854, 0.9301390385986208),
            (0.039142449434608845, 0.8301568806048566),
            (0.129312809767979, 0.5593688070080342),
            (0.07456118930435514, 0.7040048688065313),
            (0.04088831446497813, 0.60508575853531),
            (0.014923638907438481, 0.7431822570856689),
            (0.0020691038491023883, 0.6333104818121875),
        ],
        [
            0.017234580425452638,
            0.0035546968113974735,
            0.007617478258502418,
            0.0008825962091542701,
            0.01587642729376499,
            0.01576867932261981,
            0.012325990526792415,
            0.011491785488561626,
            0.005160941091209432,
            0.0035546968113974735,
            0.007617478258502418,
            0.0008825962091542701,
            0.01587642729376499,
            0.01576867932261981,
            0.012325990526792415,
            0.011491785488561626,
            0.005160941091209432,
            0.0035546968113974735,
            0.007617478258502418,
            0.0008825962091542701,
            0.01587642729376499,
            0.01576867932261981,
            0.012325990526792415,
            0.011491785488561626,
            0.005160941091209432,
            0.0014628462439400358,
            0.0016636944202969523,
            0.004847759540812101,
            0.013173132353722682,
            0.009054037295215252,
            0.008051104730469714,
            0.00422796241954674,
            0.0016410687574198689,
            0.0014628462439400358,
            0.0016636944202969523,
            0.004847759540812101,
            0.013173132353722682,
            0.009054037295215252,
            0.008051104730469714,
            0.00422796241954674,
            0.0016410687574198689,
            0.0014628462439400358,
            0.0016636944202969523,
            0.004847759540812101,
            0.013173132353722682,
            0.009054037295215252,
            0.008051104730469714,
            0.00422796241954674,
            0.0016410687574198689,
            0.0014628462439400358,
            0.0016636944202969523,
            0.004847759540812101,
            0.013173132353722682,
            0.009054037295215252,
            0.008051104730469714,
            0.00422796241954674,
            0.0016410687574198689,
            0.0014628462439400358,
            0.0016636944202969523,
            0.004847759540812101,
            0.013173132353722682,
            0.009054037295215252,
            0.008051104730469714,
            0.00422796241954674,
            0.0016410687574198689,
            0.0014628462439400358,
            0.0016636944202969523,
            0.004847759540812101,
            0.013173132353722682,
            0.009054037295215252,
            0.008051104730469714,
            0.00422796241954674,
            0.0016410687574198689,
        ],
    ),
    20: (
        [
            (0.3333333333333333, 0.3333333333333333),
            (0.18629499774454095, 0.18629499774454095),
            (0.037310880598884766, 0.037310880598884766),
            (0.476245611540499, 0.476245611540499),
            (0.4455510569559248, 0.4455510569559248),
            (0.25457926767333916, 0.25457926767333916),
            (0.39342534781709987, 0.39342534781709987),
            (0.01097614102839789, 0.01097614102839789),
            (0.10938359671171471, 0.10938359671171471),
            (0.18629499774454095, 0.6274100045109181),
            (0.037310880598884766, 0.9253782388022305),
            (0.476245611540499, 0.047508776919002016),
            (0.4455510569559248, 0.10889788608815043),
            (0.25457926767333916, 0.4908414646533217),
            (0.39342534781709987, 0.21314930436580026),
            (0.01097614102839789, 0.9780477179432042),
            (0.10938359671171471, 0.7812328065765706),
            (0.6274100045109181, 0.18629499774454095),
            (0.9253782388022305, 0.037310880598884766),
            (0.047508776919002016, 0.476245611540499),
            (0.10889788608815043, 0.4455510569559248),
            (0.4908414646533217, 0.25457926767333916),
            (0.21314930436580026, 0.39342534781709987),
            (0.9780477179432042, 0.01097614102839789),
            (0.7812328065765706, 0.10938359671171471),
            (0.004854937607623827, 0.06409058560843404),
            (0.10622720472027006, 0.2156070573900944),
            (0.007570780504696579, 0.15913370765706722),
            (0.13980807199179993, 0.317860123835772),
            (0.04656036490766434, 0.19851813222878817),
            (0.038363684775374655, 0.09995229628813862),
            (0.009831548292802588, 0.42002375881622406),
            (0.05498747914298685, 0.33313481730958744),
            (0.01073721285601111, 0.2805814114236652),
            (0.9310544767839422, 0.004854937607623827),
            (0.6781657378896355, 0.10622720472027006),
            (0.8332955118382361, 0.007570780504696579),
            (0.5423318041724281, 0.13980807199179993),
            (0.7549215028635474, 0.04656036490766434),
            (0.8616840189364867, 0.038363684775374655),
            (0.5701446928909732, 0.009831548292802588),
            (0.6118777035474257, 0.05498747914298685),
            (0.7086813757203236, 0.01073721285601111),
            (0.06409058560843404, 0.9310544767839422),
            (0.2156070573900944, 0.6781657378896355),
            (0.15913370765706722, 0.8332955118382361),
            (0.317860123835772, 0.5423318041724281),
            (0.19851813222878817, 0.7549215028635474),
            (0.09995229628813862, 0.8616840189364867),
            (0.42002375881622406, 0.5701446928909732),
            (0.33313481730958744, 0.6118777035474257),
            (0.2805814114236652, 0.7086813757203236),
            (0.06409058560843404, 0.004854937607623827),
            (0.2156070573900944, 0.10622720472027006),
            (0.15913370765706722, 0.007570780504696579),
            (0.317860123835772, 0.13980807199179993),
            (0.19851813222878817, 0.04656036490766434),
            (0.09995229628813862, 0.038363684775374655),
            (0.42002375881622406, 0.009831548292802588),
            (0.33313481730958744, 0.05498747914298685),
            (0.2805814114236652, 0.01073721285601111),
            (0.9310544767839422, 0.06409058560843404),
            (0.6781657378896355, 0.2156070573900944),
            (0.8332955118382361, 0.15913370765706722),
            (0.5423318041724281, 0.317860123835772),
            (0.7549215028635474, 0.19851813222878817),
            (0.8616840189364867, 0.09995229628813862),
            (0.5701446928909732, 0.42002375881622406),
            (0.6118777035474257, 0.33313481730958744),
            (0.7086813757203236, 0.2805814114236652),
            (0.004854937607623827, 0.9310544767839422),
            (0.10622720472027006, 0.6781657378896355),
            (0.007570780504696579, 0.8332955118382361),
            (0.13980807199179993, 0.5423318041724281),
            (0.04656036490766434, 0.7549215028635474),
            (0.038363684775374655, 0.8616840189364867),
            (0.009831548292802588, 0.5701446928909732),
            (0.05498747914298685, 0.6118777035474257),
            (0.01073721285601111, 0.7086813757203236),
        ],
        [
            0.013910110701453116,
            0.009173462974252915,
            0.0021612754106655778,
            0.007101825303408441,
            0.009452399933232448,
            0.014083201307520249,
            0.013788050629070459,
            0.00079884079106662,
            0.007830230776074535,
            0.009173462974252915,
            0.0021612754106655778,
            0.007101825303408441,
            0.009452399933232448,
            0.014083201307520249,
            0.013788050629070459,
            0.00079884079106662,
            0.007830230776074535,
            0.009173462974252915,
            0.0021612754106655778,
            0.007101825303408441,
            0.009452399933232448,
            0.014083201307520249,
            0.013788050629070459,
            0.00079884079106662,
            0.007830230776074535,
            0.0011298696021258656,
            0.007722607822099231,
            0.002202897418558498,
            0.011691745731827735,
            0.00598639857895469,
            0.004145711527613858,
            0.003695681500255298,
            0.008667225567219335,
            0.0035782002384576856,
            0.0011298696021258656,
            0.007722607822099231,
            0.002202897418558498,
            0.011691745731827735,
            0.00598639857895469,
            0.004145711527613858,
            0.003695681500255298,
            0.008667225567219335,
            0.0035782002384576856,
            0.0011298696021258656,
            0.007722607822099231,
            0.002202897418558498,
            0.011691745731827735,
            0.00598639857895469,
            0.004145711527613858,
            0.003695681500255298,
            0.008667225567219335,
            0.0035782002384576856,
            0.0011298696021258656,
            0.007722607822099231,
            0.002202897418558498,
            0.011691745731827735,
            0.00598639857895469,
            0.004145711527613858,
            0.003695681500255298,
            0.008667225567219335,
            0.0035782002384576856,
            0.0011298696021258656,
            0.007722607822099231,
            0.002202897418558498,
            0.011691745731827735,
            0.00598639857895469,
            0.004145711527613858,
            0.003695681500255298,
            0.008667225567219335,
            0.0035782002384576856,
            0.0011298696021258656,
            0.007722607822099231,
            0.002202897418558498,
            0.011691745731827735,
            0.00598639857895469,
            0.004145711527613858,
            0.003695681500255298,
            0.008667225567219335,
            0.0035782002384576856,
        ],
    ),
}
