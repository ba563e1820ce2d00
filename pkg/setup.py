from setuptools import setup, find_packages

setup (
       name='Albatch',
       version='0.1',
       package_dir={'': 'src/albatch'},
       packages=find_packages('src/albatch'),

       install_requires=['numpy>=1.21',
                         'pandas>=1.3',
                         'scipy>=1.7',
                         'scikit-learn>=1.0',
                         'statsmodels>=0.13',
                         'joblib>=1.1'],
       tests_require=['pytest>=7'],

       entry_points={
           'console_scripts': ['albatch = libalbatch.cli:main'],
       },

       author='The Albatch authors',
       author_email='',

       url='',
       license='GPLv3',
       description='Batch-mode active learning for regression',
       long_description=open('README.rst', encoding='utf-8').read(),
       )
