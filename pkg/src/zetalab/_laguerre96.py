# 96-point Gauss-Laguerre rule, nodes/weights refined to 50 digits
# offline and frozen here as exact hex floats.
import numpy as np

NODES = np.array([
    float.fromhex('0x1.eaf219a07f72fp-7'),
    float.fromhex('0x1.435d028a3fe26p-4'),
    float.fromhex('0x1.8d648c44b48cdp-3'),
    float.fromhex('0x1.70f7552c51a73p-2'),
    float.fromhex('0x1.27d96990c7098p-1'),
    float.fromhex('0x1.b17a0e2b51c4fp-1'),
    float.fromhex('0x1.2ab3820ebe659p+0'),
    float.fromhex('0x1.89d5c1ff46cb4p+0'),
    float.fromhex('0x1.f62a4d5234abcp+0'),
    float.fromhex('0x1.37dc4bc8d24e7p+1'),
    float.fromhex('0x1.7b448239b41eep+1'),
    float.fromhex('0x1.c552759495d5bp+1'),
    float.fromhex('0x1.0b05a68226febp+2'),
    float.fromhex('0x1.36ba56a5629dep+2'),
    float.fromhex('0x1.65ca5d7d28712p+2'),
    float.fromhex('0x1.98390e730d51fp+2'),
    float.fromhex('0x1.ce09ff66229c8p+2'),
    float.fromhex('0x1.03a0850f26846p+3'),
    float.fromhex('0x1.21f126efb0312p+3'),
    float.fromhex('0x1.41f9188ed0f85p+3'),
    float.fromhex('0x1.63bab1aabd10ep+3'),
    float.fromhex('0x1.87386f8424af7p+3'),
    float.fromhex('0x1.ac74f5f041e2fp+3'),
    float.fromhex('0x1.d373107fb602bp+3'),
    float.fromhex('0x1.fc35b3bb7f9acp+3'),
    float.fromhex('0x1.135fff3cb8aedp+4'),
    float.fromhex('0x1.298a9da4daadap+4'),
    float.fromhex('0x1.409c70ff86f77p+4'),
    float.fromhex('0x1.58974ca9d7fa9p+4'),
    float.fromhex('0x1.717d1c566029ep+4'),
    float.fromhex('0x1.8b4fe4ff59284p+4'),
    float.fromhex('0x1.a611c5ea7e983p+4'),
    float.fromhex('0x1.c1c4f9bfef72dp+4'),
    float.fromhex('0x1.de6bd7b593fadp+4'),
    float.fromhex('0x1.fc08d4d0ad9e9p+4'),
    float.fromhex('0x1.0d4f429fb0f3ep+5'),
    float.fromhex('0x1.1d17cee6214f5p+5'),
    float.fromhex('0x1.2d5f7ab7061b1p+5'),
    float.fromhex('0x1.3e27c37b08a68p+5'),
    float.fromhex('0x1.4f72397007c61p+5'),
    float.fromhex('0x1.614080a33c3e4p+5'),
    float.fromhex('0x1.739451ff48c39p+5'),
    float.fromhex('0x1.866f7c70194e3p+5'),
    float.fromhex('0x1.99d3e61eae777p+5'),
    float.fromhex('0x1.adc38dc732652p+5'),
    float.fromhex('0x1.c2408c2bfeb87p+5'),
    float.fromhex('0x1.d74d15a88f84fp+5'),
    float.fromhex('0x1.eceb7be7c0484p+5'),
    float.fromhex('0x1.018f17e08fa8ap+6'),
    float.fromhex('0x1.0cf3e1a0d2426p+6'),
    float.fromhex('0x1.18a575f2567eep+6'),
    float.fromhex('0x1.24a5428164a6dp+6'),
    float.fromhex('0x1.30f4c93e5a439p+6'),
    float.fromhex('0x1.3d95a1d4da0d6p+6'),
    float.fromhex('0x1.4a897b48d932dp+6'),
    float.fromhex('0x1.57d21dbe53cf4p+6'),
    float.fromhex('0x1.65716c71302c2p+6'),
    float.fromhex('0x1.736967e3b9196p+6'),
    float.fromhex('0x1.81bc304b22c5cp+6'),
    float.fromhex('0x1.906c0842cc644p+6'),
    float.fromhex('0x1.9f7b57d06f550p+6'),
    float.fromhex('0x1.aeecafc539415p+6'),
    float.fromhex('0x1.bec2cd89fc6fcp+6'),
    float.fromhex('0x1.cf009f67487e9p+6'),
    float.fromhex('0x1.dfa9495d7c836p+6'),
    float.fromhex('0x1.f0c02aa4e234fp+6'),
    float.fromhex('0x1.012471f96a1e4p+7'),
    float.fromhex('0x1.0a23af538e46cp+7'),
    float.fromhex('0x1.135fea863aa6dp+7'),
    float.fromhex('0x1.1cdb6df070570p+7'),
    float.fromhex('0x1.2698b6b382e9ap+7'),
    float.fromhex('0x1.309a7b28e4e4fp+7'),
    float.fromhex('0x1.3ae3b27813ab1p+7'),
    float.fromhex('0x1.45779d8d42457p+7'),
    float.fromhex('0x1.5059d1c367ebfp+7'),
    float.fromhex('0x1.5b8e45ac75deep+7'),
    float.fromhex('0x1.6719608326c9dp+7'),
    float.fromhex('0x1.73000cfebae62p+7'),
    float.fromhex('0x1.7f47d07f7cd4ep+7'),
    float.fromhex('0x1.8bf6e7e375f5cp+7'),
    float.fromhex('0x1.99146bd2531d8p+7'),
    float.fromhex('0x1.a6a87f0b02092p+7'),
    float.fromhex('0x1.b4bc8a573f0b3p+7'),
    float.fromhex('0x1.c35b8b7ae5bfbp+7'),
    float.fromhex('0x1.d2927f230e204p+7'),
    float.fromhex('0x1.e270f239d3084p+7'),
    float.fromhex('0x1.f309ce6e225c9p+7'),
    float.fromhex('0x1.023a416cf85f2p+8'),
    float.fromhex('0x1.0b6761051c12dp+8'),
    float.fromhex('0x1.151f9f5ae8ccbp+8'),
    float.fromhex('0x1.1f7d1b3c3716ep+8'),
    float.fromhex('0x1.2aa4c3de0dc58p+8'),
    float.fromhex('0x1.36ce41061f38bp+8'),
    float.fromhex('0x1.44559e8acf067p+8'),
    float.fromhex('0x1.53ebe17b07d17p+8'),
    float.fromhex('0x1.675b9026167f7p+8'),
])

WEIGHTS = np.array([
    float.fromhex('0x1.364d21c28df0ep-5'),
    float.fromhex('0x1.52d21bb6bac0bp-4'),
    float.fromhex('0x1.da97250f90099p-4'),
    float.fromhex('0x1.1216ab41bbb6ep-3'),
    float.fromhex('0x1.176a5808f1788p-3'),
    float.fromhex('0x1.02a2587507d77p-3'),
    float.fromhex('0x1.b91bc25c37d2ep-4'),
    float.fromhex('0x1.5d7cd58180dfdp-4'),
    float.fromhex('0x1.02a138444ecb4p-4'),
    float.fromhex('0x1.66cbdd7439411p-5'),
    float.fromhex('0x1.d3b47c16b1cbap-6'),
    float.fromhex('0x1.1eee48e4440edp-6'),
    float.fromhex('0x1.4bcc176f91356p-7'),
    float.fromhex('0x1.69ef930d2db2cp-8'),
    float.fromhex('0x1.74b0f4d256ebbp-9'),
    float.fromhex('0x1.6a717fb9283d5p-10'),
    float.fromhex('0x1.4d025f6074bb2p-11'),
    float.fromhex('0x1.21226273e88e9p-12'),
    float.fromhex('0x1.da87076150b62p-14'),
    float.fromhex('0x1.700d3cfe5843ep-15'),
    float.fromhex('0x1.0dd15f5726bc6p-16'),
    float.fromhex('0x1.75e54c636554ap-18'),
    float.fromhex('0x1.e9a1bd1ac6304p-20'),
    float.fromhex('0x1.2eebd320f5ba1p-21'),
    float.fromhex('0x1.6215001285f7cp-23'),
    float.fromhex('0x1.86e4c86ca3d6ep-25'),
    float.fromhex('0x1.977330d3e316dp-27'),
    float.fromhex('0x1.90e19f4031ddfp-29'),
    float.fromhex('0x1.7429d0865ac32p-31'),
    float.fromhex('0x1.45e25e0fc2c77p-33'),
    float.fromhex('0x1.0d0bcfa282021p-35'),
    float.fromhex('0x1.a2a8e2c054876p-38'),
    float.fromhex('0x1.32d4d66c4178bp-40'),
    float.fromhex('0x1.a76e0c5f27f06p-43'),
    float.fromhex('0x1.12ec354adbecdp-45'),
    float.fromhex('0x1.4fbc228ddbd3cp-48'),
    float.fromhex('0x1.8156e53306d85p-51'),
    float.fromhex('0x1.9f674398874d6p-54'),
    float.fromhex('0x1.a4518adfa347ep-57'),
    float.fromhex('0x1.8ee42a5ecf692p-60'),
    float.fromhex('0x1.62c922f0f4bffp-63'),
    float.fromhex('0x1.2780f8277b82cp-66'),
    float.fromhex('0x1.cc94c69015e3bp-70'),
    float.fromhex('0x1.4f8a9e5b764d9p-73'),
    float.fromhex('0x1.c898cd53e7ed1p-77'),
    float.fromhex('0x1.21d9b69eb98bdp-80'),
    float.fromhex('0x1.56fbd5cc45dc7p-84'),
    float.fromhex('0x1.79d9f9ed04fe3p-88'),
    float.fromhex('0x1.83169bad0f0b3p-92'),
    float.fromhex('0x1.704db0aca3406p-96'),
    float.fromhex('0x1.450baa048a7e6p-100'),
    float.fromhex('0x1.09b92851aaa61p-104'),
    float.fromhex('0x1.91d938e5aae0dp-109'),
    float.fromhex('0x1.189e740d178ccp-113'),
    float.fromhex('0x1.695e1624a905fp-118'),
    float.fromhex('0x1.ac558c838618fp-123'),
    float.fromhex('0x1.d27936db93e37p-128'),
    float.fromhex('0x1.d1d8a2670676ep-133'),
    float.fromhex('0x1.a9bbcc78a70f5p-138'),
    float.fromhex('0x1.63465fbb0df0cp-143'),
    float.fromhex('0x1.0e17a239ce363p-148'),
    float.fromhex('0x1.75316f1c2f17cp-154'),
    float.fromhex('0x1.d35b1ca793b1cp-160'),
    float.fromhex('0x1.087af08907984p-165'),
    float.fromhex('0x1.0db7daac259d4p-171'),
    float.fromhex('0x1.ee0fe190ff547p-178'),
    float.fromhex('0x1.94f820fc269c6p-184'),
    float.fromhex('0x1.27f30d84b1d21p-190'),
    float.fromhex('0x1.8014320180b2dp-197'),
    float.fromhex('0x1.b8a17eaadad15p-204'),
    float.fromhex('0x1.bcb8b897c5c26p-211'),
    float.fromhex('0x1.88cebb48ee486p-218'),
    float.fromhex('0x1.2de53d1fb96cdp-225'),
    float.fromhex('0x1.913f95bf88889p-233'),
    float.fromhex('0x1.c9f071c8b89f5p-241'),
    float.fromhex('0x1.bd5bb7c46492cp-249'),
    float.fromhex('0x1.6df278ddc07a7p-257'),
    float.fromhex('0x1.f74ed7eafccfap-266'),
    float.fromhex('0x1.1e96ae6031de8p-274'),
    float.fromhex('0x1.0b00c82fc0d7bp-283'),
    float.fromhex('0x1.917777df150cdp-293'),
    float.fromhex('0x1.df83f3be5fc7dp-303'),
    float.fromhex('0x1.bec52cdbc04dbp-313'),
    float.fromhex('0x1.3de497a4f4929p-323'),
    float.fromhex('0x1.50ee9b6d951e2p-334'),
    float.fromhex('0x1.021e597db28a0p-345'),
    float.fromhex('0x1.13a012e2e8c59p-357'),
    float.fromhex('0x1.8826e655e5df2p-370'),
    float.fromhex('0x1.5f12ebc66db0cp-383'),
    float.fromhex('0x1.6f34fc9372014p-397'),
    float.fromhex('0x1.95f8ecd2ef022p-412'),
    float.fromhex('0x1.9be2c2f468dedp-428'),
    float.fromhex('0x1.361b39556582dp-445'),
    float.fromhex('0x1.e8684a1f7a994p-465'),
    float.fromhex('0x1.9c1e53de78d85p-487'),
    float.fromhex('0x1.0cbec2421422dp-514'),
])
