from setuptools import find_packages, setup


setup(name='resolventlab',
      version="1.0",
      description='Resolvents, Loewner chains and convolution semigroups of holomorphic generators',
      packages=find_packages(exclude=['tests', 'scripts']),
      package_data={'resolventlab': ['configs/*.yaml', 'configs/specs/*.json']},
      install_requires=['numpy', 'scipy', 'yacs', 'termcolor', 'tqdm'],
      extras_require={'test': ['pytest']})
